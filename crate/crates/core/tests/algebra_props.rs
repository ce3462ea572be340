use osculant::curve::RationalCurve;
use osculant::field::{int, rat, Rational};
use osculant::matrix::Matrix;
use osculant::multiindex::MultiIndex;
use osculant::poly::Polynomial;
use osculant::random::Sampler;
use osculant::subspace::ProjSubspace;
use osculant::upoly::UPoly;
use proptest::prelude::*;

type P = Polynomial<Rational>;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly2() -> impl Strategy<Value = P> {
    prop::collection::vec(((0u32..=3, 0u32..=3), small_rational()), 0..6).prop_map(|terms| {
        P::from_terms(
            2,
            terms
                .into_iter()
                .map(|((a, b), c)| (MultiIndex(vec![a, b]), c)),
        )
    })
}

fn upoly() -> impl Strategy<Value = UPoly<Rational>> {
    prop::collection::vec(small_rational(), 0..5).prop_map(UPoly::new)
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in poly2(), b in poly2(), c in poly2()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &P::one(2), a.clone());
    }

    #[test]
    fn upoly_ring_axioms_and_division(a in upoly(), b in upoly(), c in upoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.degree() < b.degree() || r.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn partial_derivatives_commute(p in poly2(), i in 0u32..3, j in 0u32..3) {
        let di = MultiIndex(vec![i, 0]);
        let dj = MultiIndex(vec![0, j]);
        let both = MultiIndex(vec![i, j]);
        let a = p.partial_derivative(&di).unwrap().partial_derivative(&dj).unwrap();
        let b = p.partial_derivative(&dj).unwrap().partial_derivative(&di).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, p.partial_derivative(&both).unwrap());
    }

    #[test]
    fn taylor_shift_evaluates_at_the_shift(p in poly2(), x in small_rational(), y in small_rational()) {
        let shifted = p.taylor_shift(&[x.clone(), y.clone()]).unwrap();
        prop_assert_eq!(shifted.eval(&[int(0), int(0)]).unwrap(), p.eval(&[x, y]).unwrap());
    }

    #[test]
    fn normalize_is_idempotent_and_projective(
        comps in prop::collection::vec(upoly(), 2..5),
        scale in small_rational(),
        factor in upoly(),
    ) {
        let c = RationalCurve::new(comps);
        prop_assume!(!c.is_zero() && scale != int(0) && !factor.is_zero());
        let n = c.normalize().unwrap();
        prop_assert_eq!(n.normalize().unwrap(), n.clone());
        let scaled = RationalCurve::new(c.components().iter().map(|p| (p * &factor).scale(&scale)).collect());
        prop_assert_eq!(scaled.normalize().unwrap(), n);
    }

    #[test]
    fn grassmann_identity(seed in any::<u64>(), n in 2usize..7, ka in 0usize..5, kb in 0usize..5) {
        let mut s = Sampler::new(seed);
        let u = ProjSubspace::span_of(n - 1, &s.matrix(ka, n).row_vecs()).unwrap();
        let v = ProjSubspace::span_of(n - 1, &s.matrix(kb, n).row_vecs()).unwrap();
        let join = u.join(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(join.rank() + meet.rank(), u.rank() + v.rank());
        prop_assert!(u.contains(&meet) && v.contains(&meet));
        prop_assert!(join.contains(&u) && join.contains(&v));
    }

    #[test]
    fn span_does_not_depend_on_the_generators(seed in any::<u64>(), n in 2usize..6, k in 1usize..5) {
        let mut s = Sampler::new(seed);
        let gens = s.matrix(k, n);
        let mix = s.invertible_matrix(k);
        let a = ProjSubspace::span_of(n - 1, &gens.row_vecs()).unwrap();
        let b = ProjSubspace::span_of(n - 1, &(&mix * &gens).row_vecs()).unwrap();
        prop_assert_eq!(&a, &b);
        let g = s.invertible_matrix(n);
        let moved = ProjSubspace::span_of(n - 1, &gens.row_vecs().iter().map(|v| g.mul_vec(v)).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(a.image(&g), moved);
    }

    #[test]
    fn inverse_and_determinant(seed in any::<u64>(), n in 1usize..5) {
        let mut s = Sampler::new(seed);
        let a = s.invertible_matrix(n);
        let b = s.matrix(n, n);
        prop_assert_eq!(&a * &a.inverse().unwrap(), Matrix::identity(n));
        prop_assert_eq!((&a * &b).determinant(), a.determinant() * b.determinant());
        prop_assert_eq!(b.rank() + b.kernel().len(), n);
    }
}
