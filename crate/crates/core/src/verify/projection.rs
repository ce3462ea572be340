use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::catalog::{binomial, make_variety, pi_formula, ClassParams, VarietySpec};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::matrix::Matrix;
use crate::osculation::osculating_projection;
use crate::param::Parametrization;
use crate::random::{derive_seed, Sampler};
use crate::rnc::{certify_curve, fit_rnc_through, CurveCertificate};

use super::{Verdict, MAX_ATTEMPTS};

/// Parameters at which the projected curve is checked to be injective.
const INJECTIVITY_SAMPLES: usize = 6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionTrial {
    pub index: usize,
    pub seed: u64,
    pub attempts: usize,
    pub image_span: Option<i64>,
    pub curve: Option<CurveCertificate>,
    pub injective: bool,
    pub error: Option<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionReport {
    pub spec: Value,
    pub class: ClassParams,
    pub weights: Vec<u32>,
    /// Veronese order of the image.
    pub order: u32,
    pub expected_span: u64,
    pub trials: Vec<ProjectionTrial>,
    pub verdict: Verdict,
}

/// Projects from the weighted osculators at `n−2` random points and checks
/// that the image is the order-`ρ` Veronese variety, with every fitted curve
/// mapping isomorphically onto a degree-`ρ` rational normal curve.
pub fn verify_veronese_projection(
    spec: &VarietySpec,
    trials: usize,
    seed: u64,
) -> Result<ProjectionReport> {
    let class = spec.class();
    if class.n < 3 {
        return Err(Error::InvalidParams(format!(
            "{spec} has n = {} < 3",
            class.n
        )));
    }
    let v = make_variety(spec)?;
    let weights = class.ponderation();
    let order = *weights.last().expect("n ≥ 3");
    let expected_span =
        (binomial(class.r as i64 + 1 + order as i64, class.r as i64 + 1) - 1) as u64;
    let centers = &weights[..class.n as usize - 2];
    let trials: Vec<ProjectionTrial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            projection_trial(
                spec,
                &v,
                centers,
                order,
                expected_span,
                i,
                derive_seed(seed, i as u64),
            )
        })
        .collect();
    let verdict = trials
        .iter()
        .fold(Verdict::Pass, |acc, t| acc.combine(t.verdict));
    Ok(ProjectionReport {
        spec: spec.to_json(),
        class,
        weights,
        order,
        expected_span,
        trials,
        verdict,
    })
}

fn projection_trial(
    spec: &VarietySpec,
    v: &Parametrization,
    weights: &[u32],
    order: u32,
    expected_span: u64,
    index: usize,
    seed: u64,
) -> ProjectionTrial {
    let mut sampler = Sampler::new(seed);
    let mut t = ProjectionTrial {
        index,
        seed,
        attempts: 0,
        image_span: None,
        curve: None,
        injective: false,
        error: None,
        verdict: Verdict::Inconclusive,
    };
    for attempt in 1..=MAX_ATTEMPTS {
        t.attempts = attempt;
        match projection_attempt(spec, v, weights, order, expected_span, &mut sampler, &mut t) {
            Ok(passed) => {
                t.error = None;
                t.verdict = if passed { Verdict::Pass } else { Verdict::Fail };
                return t;
            }
            Err(e) if e.is_genericity() => t.error = Some(e.to_string()),
            Err(e) => {
                t.error = Some(e.to_string());
                t.verdict = Verdict::Fail;
                return t;
            }
        }
    }
    t.error = Some(
        Error::RetriesExhausted {
            attempts: MAX_ATTEMPTS,
            last: t.error.take().unwrap_or_default(),
        }
        .to_string(),
    );
    t
}

fn projection_attempt(
    spec: &VarietySpec,
    v: &Parametrization,
    weights: &[u32],
    order: u32,
    expected_span: u64,
    sampler: &mut Sampler,
    t: &mut ProjectionTrial,
) -> Result<bool> {
    let n = weights.len() + 2;
    let points: Vec<Vec<Rational>> = (0..n).map(|_| sampler.vector(v.param_dim())).collect();
    let centers: Vec<(Vec<Rational>, u32)> = points
        .iter()
        .cloned()
        .zip(weights.iter().copied())
        .collect();
    let proj = osculating_projection(v, &centers)?;
    let span = proj.image.span_dim();
    t.image_span = Some(span as i64);
    let fit = fit_rnc_through(spec, &points)?;
    let image = fit.curve.transform(&proj.projection.matrix).normalize()?;
    let cert = certify_curve(&image)?;
    t.curve = Some(cert);
    // distinct parameters must stay distinct, and the two free points must land on the image
    let params: Vec<Rational> = (0..INJECTIVITY_SAMPLES)
        .map(|_| sampler.rational())
        .collect();
    let values: Vec<Vec<Rational>> = params.iter().map(|a| image.eval(a)).collect();
    let mut injective = true;
    for i in 0..values.len() {
        for j in 0..i {
            if params[i] != params[j] {
                let pair =
                    Matrix::from_rows(&[values[i].clone(), values[j].clone()], values[i].len());
                injective &= pair.rank() == 2;
            }
        }
    }
    for p in &points[n - 2..] {
        injective &= image
            .incidence(&proj.projection.apply(&v.eval(p)?))?
            .passes_through();
    }
    t.injective = injective;
    Ok(span >= 0
        && span as u64 == expected_span
        && cert.is_rnc
        && cert.degree == order as usize
        && injective)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneralProjectionReport {
    pub spec: Value,
    pub class: ClassParams,
    pub weight: u32,
    /// The class `(r, n−1, q−ρ₁−1)` the image should belong to.
    pub image_class: ClassParams,
    pub expected_span: u64,
    pub found_spans: Vec<i64>,
    pub attempts: usize,
    pub verdict: Verdict,
}

/// Projection from a single weighted osculator `X_a(ρ₁)`, `ρ₁` the first
/// weight of the canonical pondération; checks the span of the image.
pub fn verify_general_projection(
    spec: &VarietySpec,
    trials: usize,
    seed: u64,
) -> Result<GeneralProjectionReport> {
    let class = spec.class();
    if class.n < 3 {
        return Err(Error::InvalidParams(format!(
            "{spec} has n = {} < 3",
            class.n
        )));
    }
    let v = make_variety(spec)?;
    let weight = class.ponderation()[0];
    let image_class = ClassParams::new(class.r, class.n - 1, class.q - weight - 1)?;
    let expected_span = pi_formula(image_class.r, image_class.n, image_class.q);
    let mut found_spans = Vec::new();
    let mut attempts = 0;
    let mut verdict = Verdict::Pass;
    for i in 0..trials {
        let mut sampler = Sampler::new(derive_seed(seed, i as u64));
        let mut span = None;
        for _ in 0..MAX_ATTEMPTS {
            attempts += 1;
            let p = sampler.vector(v.param_dim());
            match osculating_projection(&v, &[(p, weight)]) {
                Ok(proj) => {
                    span = Some(proj.image.span_dim() as i64);
                    break;
                }
                Err(e) if e.is_genericity() => continue,
                Err(e) => return Err(e),
            }
        }
        verdict = verdict.combine(match span {
            Some(s) if s >= 0 && s as u64 == expected_span => Verdict::Pass,
            Some(_) => Verdict::Fail,
            None => Verdict::Inconclusive,
        });
        found_spans.extend(span);
    }
    Ok(GeneralProjectionReport {
        spec: spec.to_json(),
        class,
        weight,
        image_class,
        expected_span,
        found_spans,
        attempts,
        verdict,
    })
}
