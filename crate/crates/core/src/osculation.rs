//! Osculating spaces, regularity, osculating projections and monomial contact loci.

use serde::Serialize;

use crate::catalog::formulas::binomial;
use crate::catalog::index_set::IndexSet;
use crate::curve::RationalCurve;
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::hitting::min_hitting_set;
use crate::param::Parametrization;
use crate::subspace::{direct_sum, LinearProjection, ProjSubspace};

#[derive(Clone, Debug, PartialEq)]
pub struct OsculatorReport {
    pub order: u32,
    pub subspace: ProjSubspace<Rational>,
    pub is_regular: bool,
    pub expected_dim_plus_1: u128,
}

#[derive(Serialize)]
struct OsculatorJson {
    order: u32,
    dim: isize,
    regular: bool,
    expected_dim: i128,
}

impl OsculatorReport {
    pub fn dim(&self) -> isize {
        self.subspace.dim()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OsculatorJson {
            order: self.order,
            dim: self.dim(),
            regular: self.is_regular,
            expected_dim: self.expected_dim_plus_1 as i128 - 1,
        })
        .expect("plain data")
    }
}

/// `X_p(k)`: span of `V(p)` and all derivatives of order `≤ k`.
pub fn osculator(v: &Parametrization, p: &[Rational], k: u32) -> Result<OsculatorReport> {
    if p.len() != v.param_dim() {
        return Err(Error::Dimension {
            expected: v.param_dim(),
            found: p.len(),
        });
    }
    let subspace = ProjSubspace::span_of(v.ambient(), &v.jet(p, k))?;
    let expected = binomial(v.param_dim() as i64 + k as i64, v.param_dim() as i64);
    if subspace.rank() == 0 {
        return Err(Error::InvalidParams(
            "parametrization vanishes at the point".into(),
        ));
    }
    Ok(OsculatorReport {
        order: k,
        is_regular: subspace.rank() as u128 == expected,
        subspace,
        expected_dim_plus_1: expected,
    })
}

/// Largest `k` such that `X_p(k)` has the maximal dimension.
pub fn regularity_order(v: &Parametrization, p: &[Rational]) -> Result<u32> {
    let mut k = 0;
    loop {
        let next = k + 1;
        if binomial(v.param_dim() as i64 + next as i64, v.param_dim() as i64)
            > (v.ambient() + 1) as u128
        {
            return Ok(k);
        }
        if !osculator(v, p, next)?.is_regular {
            return Ok(k);
        }
        k = next;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdmissibilityFailure {
    /// Index of the point left out of the assignment.
    pub excluded: usize,
    /// `(point index, order)` pairs of the failing assignment.
    pub orders: Vec<(usize, u32)>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdmissibilityReport {
    pub span_dim: isize,
    pub assignments_tested: usize,
    pub failure: Option<AdmissibilityFailure>,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Distinct orderings of a multiset, in lexicographic order.
fn distinct_permutations(mut w: Vec<u32>) -> Vec<Vec<u32>> {
    w.sort_unstable();
    let mut out = vec![w.clone()];
    loop {
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return out;
        };
        let j = (i..w.len())
            .rev()
            .find(|&j| w[j] > w[i - 1])
            .expect("successor exists");
        w.swap(i - 1, j);
        w[i..].reverse();
        out.push(w.clone());
    }
}

/// Checks that for every choice of `n−1` of the points and every placement
/// of the weights, the weighted osculators are regular and in direct sum
/// spanning `⟨X⟩`.
pub fn admissibility_check(
    v: &Parametrization,
    points: &[Vec<Rational>],
    weights: &[u32],
) -> Result<AdmissibilityReport> {
    let n = points.len();
    if n < 2 || weights.len() != n - 1 {
        return Err(Error::Dimension {
            expected: n.saturating_sub(1),
            found: weights.len(),
        });
    }
    let span = v.span();
    let max_order = weights.iter().copied().max().unwrap_or(0);
    let jets: Vec<Vec<Vec<Rational>>> = points.iter().map(|p| v.jet(p, max_order)).collect();
    let d = v.param_dim() as i64;
    let oscs: Vec<Vec<ProjSubspace<Rational>>> = jets
        .iter()
        .map(|j| {
            (0..=max_order)
                .map(|k| {
                    let count = binomial(d + k as i64, d) as usize;
                    ProjSubspace::span_of(v.ambient(), &j[..count]).expect("jet length")
                })
                .collect()
        })
        .collect();
    let mut tested = 0;
    for excluded in 0..n {
        let chosen: Vec<usize> = (0..n).filter(|&i| i != excluded).collect();
        for perm in distinct_permutations(weights.to_vec()) {
            tested += 1;
            let orders: Vec<(usize, u32)> =
                chosen.iter().copied().zip(perm.iter().copied()).collect();
            let fail = |reason: String| AdmissibilityFailure {
                excluded,
                orders: orders.clone(),
                reason,
            };
            let mut parts = Vec::new();
            for &(i, k) in &orders {
                let o = &oscs[i][k as usize];
                if o.rank() as u128 != binomial(d + k as i64, d) {
                    return Ok(AdmissibilityReport {
                        span_dim: span.dim(),
                        assignments_tested: tested,
                        failure: Some(fail(format!(
                            "osculator of order {k} at point {i} is not regular"
                        ))),
                    });
                }
                parts.push(o.clone());
            }
            let reason = match direct_sum(&parts) {
                Ok(sum) if sum.rank() == span.rank() => continue,
                Ok(sum) => format!(
                    "direct sum has dimension {}, span has {}",
                    sum.dim(),
                    span.dim()
                ),
                Err(e) => e.to_string(),
            };
            return Ok(AdmissibilityReport {
                span_dim: span.dim(),
                assignments_tested: tested,
                failure: Some(fail(reason)),
            });
        }
    }
    Ok(AdmissibilityReport {
        span_dim: span.dim(),
        assignments_tested: tested,
        failure: None,
    })
}

/// A projected variety together with the projection used.
#[derive(Clone, Debug)]
pub struct OsculatingProjection {
    pub image: Parametrization,
    pub projection: LinearProjection<Rational>,
}

/// Projection from the direct sum of the osculators `X_{p_i}(k_i)`.
pub fn osculating_projection(
    v: &Parametrization,
    centers: &[(Vec<Rational>, u32)],
) -> Result<OsculatingProjection> {
    let parts = centers
        .iter()
        .map(|(p, k)| osculator(v, p, *k).map(|r| r.subspace))
        .collect::<Result<Vec<_>>>()?;
    let center = if parts.is_empty() {
        ProjSubspace::empty(v.ambient())
    } else {
        direct_sum(&parts)
            .map_err(|e| Error::GeneralPosition(format!("osculators at the centers: {e}")))?
    };
    let projection = LinearProjection::from_center(&center)?;
    let image = v.project(&projection)?;
    Ok(OsculatingProjection { image, projection })
}

/// Checks that the osculator of `π(X)` at `π(x)` is `π(X_x(k))` when the center
/// meets `X_x(k)` trivially.
pub fn projection_compatibility(
    v: &Parametrization,
    p: &[Rational],
    k: u32,
    center: &ProjSubspace<Rational>,
) -> Result<bool> {
    let osc = osculator(v, p, k)?.subspace;
    direct_sum(&[center.clone(), osc.clone()])?;
    let proj = LinearProjection::from_center(center)?;
    let image = v.project(&proj)?;
    Ok(osculator(&image, p, k)?.subspace == osc.image(&proj.matrix))
}

/// Projects `c` from its point at parameter `a` and compares the order-`k`
/// osculator of the extended image curve at `a` with `π(C_a(k+1))`.
pub fn curve_projection_check(c: &RationalCurve<Rational>, a: &Rational, k: usize) -> Result<bool> {
    let osc = c.osculator(a, k + 1);
    if osc.rank() != k + 2 {
        return Err(Error::Regularity { order: k + 1 });
    }
    let center = ProjSubspace::span_of(c.ambient(), &[c.eval(a)])?;
    let proj = LinearProjection::from_center(&center)?;
    // every component of π∘c vanishes at a; normalizing removes the factor
    let image = c.transform(&proj.matrix).normalize()?;
    if image.ambient() == 0 {
        return Ok(true);
    }
    Ok(image.osculator(a, k) == osc.image(&proj.matrix))
}

/// Dimension of the common zero set of the monomials of `A` of degree `> k`,
/// i.e. of `X ∩ X_0(k)` for the monomial variety of `A`.
pub fn contact_locus_dim_monomial(a: &IndexSet, k: u32) -> usize {
    let supports: Vec<u64> = a
        .indices()
        .iter()
        .filter(|i| i.degree() > k)
        .map(|i| i.support().iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let hit = min_hitting_set(&supports).expect("nonzero indices have nonempty support");
    a.nvars() - hit.count_ones() as usize
}
