//! Explicit parametrizations of every family.

use crate::error::Result;
use crate::field::{int, Rational};
use crate::matrix::Matrix;
use crate::multiindex::{exact_degree, up_to_degree, MultiIndex};
use crate::param::Parametrization;
use crate::poly::Polynomial;

use super::index_set::{build_a, build_a_cone, IndexSet, ScrollSpec};
use super::quadratic::QuadraticForm;
use super::spec::VarietySpec;

type P = Polynomial<Rational>;

/// Full Veronese index set: `1 ≤ |α| ≤ order`.
pub fn veronese_set(dim: u32, order: u32) -> IndexSet {
    IndexSet::new(
        dim as usize,
        up_to_degree(dim as usize, order)
            .into_iter()
            .filter(|e| !e.is_zero()),
    )
    .expect("well-formed indices")
}

/// The monomial index set behind a family, when it has one.
pub fn index_set_of(spec: &VarietySpec) -> Option<IndexSet> {
    match spec {
        VarietySpec::Veronese { dim, order } => Some(veronese_set(*dim, *order)),
        VarietySpec::Veronese33 => Some(veronese_set(3, 3)),
        VarietySpec::Scroll { a } => build_a(a, 1, 0).ok(),
        VarietySpec::StandardScroll { a, rho, chi } => build_a(a, *rho, *chi).ok(),
        VarietySpec::ConeStandard { r, q } => build_a_cone(*r, *q).ok(),
        _ => None,
    }
}

/// Quadric `T_0·T_last − g(T′)` on `P^{k+1}`, `k` the number of variables of
/// `g`. Its affine chart is `s ↦ [1 : s : g(s)]`.
pub fn graph_quadric(g: &QuadraticForm) -> QuadraticForm {
    let k = g.nvars();
    let mut gram = Matrix::zeros(k + 2, k + 2);
    gram[(0, k + 1)] = Rational::new(1.into(), 2.into());
    gram[(k + 1, 0)] = Rational::new(1.into(), 2.into());
    for i in 0..k {
        for j in 0..k {
            gram[(i + 1, j + 1)] = -g.gram()[(i, j)].clone();
        }
    }
    QuadraticForm::from_gram(gram).expect("symmetric by construction")
}

/// The form `g` with `s ↦ [1 : s : g(s)]` covering the quadric of a
/// quadric-based family.
pub fn chart_form(spec: &VarietySpec) -> Option<QuadraticForm> {
    match spec {
        VarietySpec::QuadricVeronese { r, rank, .. } => {
            let q = QuadraticForm::hyperbolic(*r as usize + 1, *rank as usize - 2).ok()?;
            QuadraticForm::from_gram(q.gram().scale(&int(-1))).ok()
        }
        VarietySpec::SegreSpecial { r, mu } => {
            QuadraticForm::hyperbolic(*r as usize, *mu as usize - 2).ok()
        }
        VarietySpec::CubicSpecial { r, mu_prime } => {
            QuadraticForm::hyperbolic(*r as usize, *mu_prime as usize).ok()
        }
        _ => None,
    }
}

/// Shifts a polynomial in `k` variables to variables `offset..offset+k` of `total`.
fn embed(p: &P, total: usize, offset: usize) -> P {
    P::from_terms(
        total,
        p.terms().map(|(e, c)| {
            let mut v = vec![0; total];
            v[offset..offset + e.len()].copy_from_slice(&e.0);
            (MultiIndex(v), c.clone())
        }),
    )
}

pub fn make_variety(spec: &VarietySpec) -> Result<Parametrization> {
    spec.validate()?;
    if let Some(set) = index_set_of(spec) {
        return set.parametrization();
    }
    match spec {
        VarietySpec::QuadricVeronese { r, rho, .. } => {
            let k = *r as usize + 1;
            let g = embed(
                &chart_form(spec).expect("quadric family").polynomial(),
                k,
                0,
            );
            // degree-ρ monomials in (U_b, U′, U_a) not divisible by U_a·U_b,
            // on the chart U_b = 1, U′ = s, U_a = g(s)
            let mut comps: Vec<P> = up_to_degree(k, *rho)
                .into_iter()
                .filter(|e| !e.is_zero())
                .map(|e| P::monomial(e, int(1)))
                .collect();
            for i in 1..=*rho {
                for beta in exact_degree(k, rho - i) {
                    comps.push(&g.pow(i) * &P::monomial(beta, int(1)));
                }
            }
            Parametrization::affine(k, comps)
        }
        VarietySpec::SegreSpecial { r, .. } => {
            let d = *r as usize + 1;
            let q = embed(
                &chart_form(spec).expect("quadric family").polynomial(),
                d,
                1,
            );
            let t = P::var(d, 0);
            let s: Vec<P> = (1..d).map(|j| P::var(d, j)).collect();
            let mut comps = vec![t.clone()];
            comps.extend(s.iter().cloned());
            comps.extend(s.iter().map(|sj| &t * sj));
            comps.push(q.clone());
            comps.push(&t * &q);
            Parametrization::affine(d, comps)
        }
        VarietySpec::CubicSpecial { r, .. } => {
            let d = *r as usize + 1;
            let q = embed(
                &chart_form(spec).expect("quadric family").polynomial(),
                d,
                1,
            );
            let t = P::var(d, 0);
            let s: Vec<P> = (1..d).map(|j| P::var(d, j)).collect();
            let mut comps = vec![t.clone(), t.pow(2), t.pow(3)];
            comps.extend(s.iter().cloned());
            comps.extend(s.iter().map(|sj| &t * sj));
            comps.extend(s.iter().map(|sj| &t.pow(2) * sj));
            comps.push(q.clone());
            comps.push(&t * &q);
            Parametrization::affine(d, comps)
        }
        _ => unreachable!("monomial families handled above"),
    }
}

/// Scroll chart `S_a` as `A(1, 0)`.
pub fn scroll_set(a: &ScrollSpec) -> IndexSet {
    build_a(a, 1, 0).expect("A(1,0) is always in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::formulas::pi_formula;

    fn check(spec: VarietySpec) {
        let v = make_variety(&spec).unwrap();
        let c = spec.class();
        assert_eq!(v.ambient() as u64, c.pi(), "{spec}");
        assert_eq!(v.span_dim() as u64, c.pi(), "{spec}");
    }

    #[test]
    fn spans_match_pi() {
        check(VarietySpec::Veronese { dim: 2, order: 2 });
        check(VarietySpec::Scroll {
            a: ScrollSpec::new(vec![1, 1]).unwrap(),
        });
        check(VarietySpec::StandardScroll {
            a: ScrollSpec::new(vec![1, 1]).unwrap(),
            rho: 2,
            chi: 0,
        });
        check(VarietySpec::ConeStandard { r: 2, q: 6 });
        check(VarietySpec::QuadricVeronese {
            r: 3,
            rho: 2,
            rank: 6,
        });
        check(VarietySpec::SegreSpecial { r: 2, mu: 4 });
        check(VarietySpec::CubicSpecial { r: 2, mu_prime: 1 });
        check(VarietySpec::Veronese33);
    }

    #[test]
    fn segre_special_lives_in_p7() {
        let v = make_variety(&VarietySpec::SegreSpecial { r: 2, mu: 4 }).unwrap();
        assert_eq!(v.ambient(), 7);
        assert_eq!(pi_formula(2, 3, 3), 7);
    }

    #[test]
    fn quadric_chart_lies_on_quadric() {
        let spec = VarietySpec::QuadricVeronese {
            r: 3,
            rho: 1,
            rank: 5,
        };
        let g = chart_form(&spec).unwrap();
        let quadric = graph_quadric(&g);
        let s = [int(1), int(-2), int(3), int(5)];
        let mut pt = vec![int(1)];
        pt.extend(s.iter().cloned());
        pt.push(g.eval(&s));
        assert_eq!(quadric.eval(&pt), int(0));
        assert_eq!(quadric.rank(), 5);
    }
}
