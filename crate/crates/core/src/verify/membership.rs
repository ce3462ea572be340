use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::catalog::{make_variety, ClassParams, VarietySpec};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::osculation::{admissibility_check, AdmissibilityReport};
use crate::param::Parametrization;
use crate::random::{derive_seed, Sampler};
use crate::rnc::{certify_curve, fit_rnc_through, CurveCertificate};

use super::{point_strings, Verdict, MAX_ATTEMPTS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub found: i64,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub index: usize,
    pub seed: u64,
    pub attempts: usize,
    pub points: Vec<Vec<String>>,
    pub certificate: Option<CurveCertificate>,
    pub incidence: bool,
    pub admissibility: Option<AdmissibilityReport>,
    /// Radicand of the quadratic extension the fit passed through.
    pub extension: Option<String>,
    pub error: Option<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MembershipReport {
    pub spec: Value,
    pub class: ClassParams,
    pub span: SpanCheck,
    pub trials: Vec<TrialReport>,
    pub verdict: Verdict,
}

/// Checks that `spec` spans `P^π` for the declared class and that seeded
/// trials fit certified degree-`q` curves through `n` random points.
pub fn verify_membership(
    spec: &VarietySpec,
    declared: Option<ClassParams>,
    trials: usize,
    seed: u64,
) -> Result<MembershipReport> {
    let v = make_variety(spec)?;
    let class = declared.unwrap_or_else(|| spec.class());
    let span = SpanCheck {
        found: v.span_dim() as i64,
        expected: class.pi(),
    };
    let trials: Vec<TrialReport> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(spec, &v, &class, i, derive_seed(seed, i as u64)))
        .collect();
    let span_verdict = if span.found >= 0 && span.found as u64 == span.expected {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let verdict = trials
        .iter()
        .fold(span_verdict, |acc, t| acc.combine(t.verdict));
    Ok(MembershipReport {
        spec: spec.to_json(),
        class,
        span,
        trials,
        verdict,
    })
}

fn run_trial(
    spec: &VarietySpec,
    v: &Parametrization,
    class: &ClassParams,
    index: usize,
    seed: u64,
) -> TrialReport {
    let mut sampler = Sampler::new(seed);
    let mut report = TrialReport {
        index,
        seed,
        attempts: 0,
        points: Vec::new(),
        certificate: None,
        incidence: false,
        admissibility: None,
        extension: None,
        error: None,
        verdict: Verdict::Inconclusive,
    };
    for attempt in 1..=MAX_ATTEMPTS {
        report.attempts = attempt;
        let points: Vec<Vec<Rational>> = (0..class.n)
            .map(|_| sampler.vector(v.param_dim()))
            .collect();
        report.points = points.iter().map(|p| point_strings(p)).collect();
        match check_points(spec, v, class, &points, &mut report) {
            Ok(passed) => {
                report.error = None;
                report.verdict = if passed { Verdict::Pass } else { Verdict::Fail };
                return report;
            }
            Err(e) if e.is_genericity() => report.error = Some(e.to_string()),
            Err(e) => {
                report.error = Some(e.to_string());
                report.verdict = Verdict::Fail;
                return report;
            }
        }
    }
    report.error = Some(
        Error::RetriesExhausted {
            attempts: MAX_ATTEMPTS,
            last: report.error.take().unwrap_or_default(),
        }
        .to_string(),
    );
    report
}

fn check_points(
    spec: &VarietySpec,
    v: &Parametrization,
    class: &ClassParams,
    points: &[Vec<Rational>],
    report: &mut TrialReport,
) -> Result<bool> {
    let fit = fit_rnc_through(spec, points)?;
    let cert = certify_curve(&fit.curve)?;
    report.certificate = Some(cert);
    report.extension = fit.extension.as_ref().map(ToString::to_string);
    let mut incidence = true;
    for p in points {
        incidence &= fit.curve.incidence(&v.eval(p)?)?.passes_through();
    }
    report.incidence = incidence;
    let adm = admissibility_check(v, points, &class.ponderation())?;
    let adm_ok = adm.passed();
    report.admissibility = Some(adm);
    Ok(cert.is_rnc && cert.degree == class.q as usize && incidence && adm_ok)
}
