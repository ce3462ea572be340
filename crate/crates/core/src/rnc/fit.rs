use num_traits::{One, Zero};

use crate::catalog::{chart_form, graph_quadric, make_variety, QuadraticForm, VarietySpec};
use crate::curve::{moebius_through, P1Point, RationalCurve};
use crate::error::{Error, Result};
use crate::field::{int, rational_sqrt, Field, QuadExt, Rational};
use crate::matrix::Matrix;
use crate::param::Parametrization;
use crate::subspace::{LinearProjection, ProjSubspace};
use crate::upoly::UPoly;

use super::conic::{conic_on_quadric, conic_through_five, parametrize_conic, veronese2};
use super::interpolate::{rnc_through_points, FrameChoice};
use super::section::fit_scroll_section;

/// A rational normal curve on a variety through prescribed chart points.
#[derive(Clone, Debug)]
pub struct RncFit {
    pub curve: RationalCurve<Rational>,
    /// Radicand of the quadratic extension used along the way, if any.
    pub extension: Option<Rational>,
}

/// Fits the curve of the class degree through `n` chart points of `spec`.
pub fn fit_rnc_through(spec: &VarietySpec, points: &[Vec<Rational>]) -> Result<RncFit> {
    let v = make_variety(spec)?;
    let class = spec.class();
    let d = v.param_dim();
    if points.len() != class.n as usize {
        return Err(Error::Dimension {
            expected: class.n as usize,
            found: points.len(),
        });
    }
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::Dimension {
            expected: d,
            found: p.len(),
        });
    }
    let plain = |c: RationalCurve<Rational>| {
        Ok(RncFit {
            curve: c,
            extension: None,
        })
    };
    match spec {
        VarietySpec::Veronese { .. } => {
            if points[0] == points[1] {
                return Err(Error::Genericity("coincident points".into()));
            }
            let mut comps = vec![UPoly::one()];
            comps
                .extend((0..d).map(|i| {
                    UPoly::new(vec![points[0][i].clone(), &points[1][i] - &points[0][i]])
                }));
            plain(v.pushforward(&RationalCurve::new(comps))?)
        }
        VarietySpec::Scroll { a } | VarietySpec::StandardScroll { a, .. } => {
            let fit = fit_scroll_section(a, points)?;
            plain(v.pushforward(&fit.parameter_curve())?)
        }
        VarietySpec::ConeStandard { .. } => plain(v.pushforward(&cone_parameter_curve(points)?)?),
        VarietySpec::QuadricVeronese { .. } => {
            let quadric = graph_quadric(&chart_form(spec).expect("quadric family"));
            let lifted: Vec<Vec<Rational>> =
                points.iter().map(|s| graph_point(&quadric, s)).collect();
            let fit = conic_on_quadric(&quadric, [&lifted[0], &lifted[1], &lifted[2]])?;
            let comps = fit.curve.components();
            plain(v.pushforward(&RationalCurve::new(comps[..comps.len() - 1].to_vec()))?)
        }
        VarietySpec::SegreSpecial { .. } => {
            plain(v.pushforward(&segre_parameter_curve(spec, points)?)?)
        }
        VarietySpec::CubicSpecial { mu_prime, .. } => cubic_fit(&v, spec, *mu_prime, points),
        VarietySpec::Veronese33 => {
            let lifted: Vec<Vec<Rational>> = points.iter().map(|p| affine_lift(p)).collect();
            let fit = rnc_through_points(3, &lifted, &FrameChoice::standard(3))?;
            plain(v.pushforward(&fit.curve)?)
        }
    }
}

fn affine_lift(p: &[Rational]) -> Vec<Rational> {
    std::iter::once(Rational::one())
        .chain(p.iter().cloned())
        .collect()
}

/// `[1 : s : g(s)]` on the graph quadric of `g`.
fn graph_point(quadric: &QuadraticForm, s: &[Rational]) -> Vec<Rational> {
    // g(s) = −(value of the quadric at [1 : s : 0]) since the T_0·T_last term drops
    let mut x = affine_lift(s);
    x.push(Rational::zero());
    let gs = -quadric.eval(&x);
    *x.last_mut().unwrap() = gs;
    x
}

/// `[T_0² : T_0T_1 : T_0T_2 : S]`: the conic through the `(t_1, t_2)`
/// projections, with `S` read off the Veronese image linearly.
fn cone_parameter_curve(points: &[Vec<Rational>]) -> Result<RationalCurve<Rational>> {
    let plane: Vec<Vec<Rational>> = points.iter().map(|p| affine_lift(&p[..2])).collect();
    let gram = conic_through_five(&plane)?;
    let conic = parametrize_conic(&gram, &plane[0])?;
    let [t0, t1, t2] = [0, 1, 2].map(|i| conic.components()[i].clone());
    // v(T(τ)) coefficientwise, then solve V·c = v
    let vt = [
        &t0 * &t0,
        &t0 * &t1,
        &t0 * &t2,
        &t1 * &t1,
        &t1 * &t2,
        &t2 * &t2,
    ];
    let vcols = Matrix::from_fn(6, 5, |i, j| veronese2(&plane[j])[i].clone());
    let mut c = vec![Vec::new(); 5];
    for k in 0..=4 {
        let rhs: Vec<Rational> = vt.iter().map(|p| p.coeff(k)).collect();
        let sol = vcols
            .solve(&rhs)
            .ok_or_else(|| Error::Genericity("Veronese images are dependent".into()))?;
        if vcols.rank() != 5 {
            return Err(Error::Genericity("Veronese images are dependent".into()));
        }
        for i in 0..5 {
            c[i].push(sol[i].clone());
        }
    }
    let c: Vec<UPoly<Rational>> = c.into_iter().map(UPoly::new).collect();
    let mut comps = vec![&t0 * &t0, &t0 * &t1, &t0 * &t2];
    for j in 2..points[0].len() {
        comps.push(
            c.iter()
                .zip(points)
                .fold(UPoly::zero(), |acc, (ci, p)| &acc + &ci.scale(&p[j])),
        );
    }
    Ok(RationalCurve::new(comps))
}

/// `[B·Γ_0 : A·Γ_0 : B·Γ′]`: the conic of the quadric points, read through
/// the Möbius map matching the sample `t` values.
fn segre_parameter_curve(
    spec: &VarietySpec,
    points: &[Vec<Rational>],
) -> Result<RationalCurve<Rational>> {
    let quadric = graph_quadric(&chart_form(spec).expect("quadric family"));
    let lifted: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| graph_point(&quadric, &p[1..]))
        .collect();
    let fit = conic_on_quadric(&quadric, [&lifted[0], &lifted[1], &lifted[2]])?;
    let ts: [P1Point<Rational>; 3] = std::array::from_fn(|i| P1Point::finite(points[i][0].clone()));
    let m = moebius_through(&ts, &fit.params)?;
    let gamma = fit.curve.reparametrize(&m);
    let g0 = &gamma.components()[0];
    let mut comps = vec![g0.clone(), &UPoly::x() * g0];
    let n = gamma.components().len();
    comps.extend(gamma.components()[1..n - 1].iter().cloned());
    Ok(RationalCurve::new(comps))
}

fn cubic_fit(
    v: &Parametrization,
    spec: &VarietySpec,
    mu_prime: u32,
    points: &[Vec<Rational>],
) -> Result<RncFit> {
    let g = chart_form(spec).expect("quadric family");
    let lifted: Vec<Vec<Rational>> = points.iter().map(|p| affine_lift(p)).collect();
    if lifted[0].len() < 4 {
        return Err(Error::Unsupported("CubicSpecial fits need r ≥ 2".into()));
    }
    if Matrix::from_rows(&lifted, lifted[0].len()).rank() != 4 {
        return Err(Error::GeneralPosition(
            "points do not span a 3-space".into(),
        ));
    }
    // L = ⟨p_i⟩ ∩ {T_0 = T_1 = 0}, in the basis p_i
    let cond = Matrix::from_fn(2, 4, |i, j| lifted[j][i].clone());
    let kernel = cond.kernel();
    if kernel.len() != 2 {
        return Err(Error::Genericity("sample t values coincide".into()));
    }
    let combine = |c: &[Rational]| -> Vec<Rational> {
        (0..lifted[0].len())
            .map(|k| (0..4).fold(Rational::zero(), |acc, i| acc + &c[i] * &lifted[i][k]))
            .collect()
    };
    let (w1, w2) = (combine(&kernel[0]), combine(&kernel[1]));
    let a = g.eval(&w1[2..]);
    let b = g.bilinear(&w1[2..], &w2[2..]) * int(2);
    let c = g.eval(&w2[2..]);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::Genericity("the line L lies on the quadric".into()));
    }
    let disc = &b * &b - int(4) * &a * &c;
    if disc.is_zero() {
        if mu_prime != 1 {
            return Err(Error::Genericity("L is tangent to the quadric".into()));
        }
        let root = if a.is_zero() {
            [int(1), int(0)]
        } else {
            [-b.clone(), int(2) * &a]
        };
        let q_hat: Vec<Rational> = (0..4)
            .map(|i| &root[0] * &kernel[0][i] + &root[1] * &kernel[1][i])
            .collect();
        let rank2 = |x: &[Rational], y: &[Rational]| {
            Matrix::from_rows(&[x.to_vec(), y.to_vec()], 4).rank() == 2
        };
        let l_hat = if rank2(&q_hat, &kernel[0]) {
            kernel[0].clone()
        } else {
            kernel[1].clone()
        };
        let y = tangent_cubic(&q_hat, &l_hat)?;
        let x = y.transform(&Matrix::from_fn(lifted[0].len(), 4, |i, j| {
            lifted[j][i].clone()
        }));
        return Ok(RncFit {
            curve: v.pushforward(&x)?,
            extension: None,
        });
    }
    if let Some(sq) = rational_sqrt(&disc) {
        let roots = quadratic_roots(&a, &b, &c, &sq);
        let curve = secant_cubic(v, &lifted, &kernel, roots)?;
        return Ok(RncFit {
            curve,
            extension: None,
        });
    }
    let sq = QuadExt::sqrt_of(&disc);
    let lift = |x: &Rational| QuadExt::from_rational(x);
    let roots = quadratic_roots(&lift(&a), &lift(&b), &lift(&c), &sq);
    let lifted_e: Vec<Vec<QuadExt>> = lifted
        .iter()
        .map(|p| p.iter().map(lift).collect())
        .collect();
    let kernel_e: Vec<Vec<QuadExt>> = kernel
        .iter()
        .map(|p| p.iter().map(lift).collect())
        .collect();
    let curve = secant_cubic(v, &lifted_e, &kernel_e, roots)?;
    if curve
        .components()
        .iter()
        .any(|c| c.coeffs().iter().any(|x| x.to_rational().is_none()))
    {
        return Err(Error::DegenerateCurve(
            "fitted curve is not defined over Q".into(),
        ));
    }
    let curve = curve
        .map(|x| x.to_rational().expect("checked rational"))
        .normalize()?;
    Ok(RncFit {
        curve,
        extension: Some(disc),
    })
}

/// Roots `(x, y)` of `A x² + B xy + C y²` given `√(B² − 4AC)`.
fn quadratic_roots<F: Field>(a: &F, b: &F, c: &F, sq: &F) -> [(F, F); 2] {
    if a.is_zero() {
        return [(F::one(), F::zero()), (-c.clone(), b.clone())];
    }
    let two_a = a.clone() + a.clone();
    [
        (-b.clone() + sq.clone(), two_a.clone()),
        (-b.clone() - sq.clone(), two_a),
    ]
}

/// The twisted cubic of the 3-space through the four sample points and the
/// two points of `L ∩ Q′`, pushed forward and normalized with the first
/// three samples at `0, ∞, 1`.
fn secant_cubic<F: Field>(
    v: &Parametrization,
    lifted: &[Vec<F>],
    kernel: &[Vec<F>],
    roots: [(F, F); 2],
) -> Result<RationalCurve<F>> {
    let mut pts: Vec<Vec<F>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| if i == j { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    for (x, y) in roots {
        pts.push(
            (0..4)
                .map(|i| x.clone() * kernel[0][i].clone() + y.clone() * kernel[1][i].clone())
                .collect(),
        );
    }
    let fit = rnc_through_points(3, &pts, &FrameChoice::standard(3))?;
    let src = [
        P1Point::finite(F::zero()),
        P1Point::infinity(),
        P1Point::finite(F::one()),
    ];
    let dst = [
        fit.params[0].clone(),
        fit.params[1].clone(),
        fit.params[2].clone(),
    ];
    let y = fit.curve.reparametrize(&moebius_through(&src, &dst)?);
    let x = y.transform(&Matrix::from_fn(lifted[0].len(), 4, |i, j| {
        lifted[j][i].clone()
    }));
    v.pushforward(&x)
}

/// The twisted cubic through the four basis points of `P³`, passing through
/// `q̂` with tangent line `⟨q̂, ℓ̂⟩`: it projects from `q̂` onto a conic.
fn tangent_cubic(q_hat: &[Rational], l_hat: &[Rational]) -> Result<RationalCurve<Rational>> {
    let proj = LinearProjection::from_center(&ProjSubspace::span_of(3, &[q_hat.to_vec()])?)?;
    let unit = |i: usize| {
        (0..4)
            .map(|j| if i == j { int(1) } else { int(0) })
            .collect::<Vec<_>>()
    };
    let mut images: Vec<Vec<Rational>> = (0..4).map(|i| proj.apply(&unit(i))).collect();
    images.push(proj.apply(l_hat));
    if images.iter().any(|p| p.iter().all(Zero::is_zero)) {
        return Err(Error::GeneralPosition(
            "a point coincides with the projection center".into(),
        ));
    }
    let gram = conic_through_five(&images)?;
    let mut conic = parametrize_conic(&gram, &images[0])?;
    let locate = |c: &RationalCurve<Rational>| -> Result<Vec<P1Point<Rational>>> {
        images
            .iter()
            .map(|p| {
                c.incidence(p)?
                    .parameter()
                    .ok_or_else(|| Error::Genericity("point not simply on the conic".into()))
            })
            .collect()
    };
    let mut params = locate(&conic)?;
    if params.iter().any(P1Point::is_infinite) {
        // old = (cτ + 1)/τ keeps every finite old parameter other than c finite
        let c = (0..)
            .map(int)
            .find(|c| params.iter().all(|p| p.affine().as_ref() != Some(c)))
            .expect("finitely many parameters");
        conic = conic.reparametrize(&Matrix::from_rows(
            &[vec![c, int(1)], vec![int(1), int(0)]],
            2,
        ));
        params = locate(&conic)?;
    }
    let mut taus = Vec::with_capacity(5);
    for p in &params {
        let t = p
            .affine()
            .ok_or_else(|| Error::Genericity("conic parameter at infinity".into()))?;
        if taus.contains(&t) {
            return Err(Error::Genericity("projected points coincide".into()));
        }
        taus.push(t);
    }
    let tau_l = taus.pop().expect("five parameters");
    let lifted_conic: Vec<UPoly<Rational>> = {
        let mut comps = vec![UPoly::zero(); 4];
        for (k, &col) in proj.kept.iter().enumerate() {
            comps[col] = conic.components()[k].clone();
        }
        comps
    };
    let j = q_hat
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero center");
    let mut hs = Vec::with_capacity(4);
    for (i, t) in taus.iter().enumerate() {
        let u: Vec<Rational> = lifted_conic
            .iter()
            .map(|c| (t - &tau_l) * c.eval(t))
            .collect();
        // u + h·q̂ must be a multiple of e_i
        let col = if j != i {
            j
        } else {
            (0..4).find(|&k| k != i && !q_hat[k].is_zero()).unwrap_or(j)
        };
        let h = -(&u[col] / &q_hat[col]);
        if (0..4).any(|k| k != i && !(&u[k] + &h * &q_hat[k]).is_zero()) {
            return Err(Error::DegenerateCurve("lift misses a sample point".into()));
        }
        hs.push(h);
    }
    let h = UPoly::interpolate(&taus, &hs);
    let shift = UPoly::linear_root(&tau_l);
    let comps = (0..4)
        .map(|k| &(&shift * &lifted_conic[k]) + &h.scale(&q_hat[k]))
        .collect();
    RationalCurve::new(comps).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ScrollSpec;
    use crate::random::Sampler;
    use crate::rnc::certify_curve;

    fn check(spec: VarietySpec, seed: u64) {
        let v = make_variety(&spec).unwrap();
        let class = spec.class();
        let mut s = Sampler::new(seed);
        let mut last = None;
        for _ in 0..8 {
            let pts: Vec<Vec<Rational>> = (0..class.n).map(|_| s.vector(v.param_dim())).collect();
            match fit_rnc_through(&spec, &pts) {
                Ok(fit) => {
                    let cert = certify_curve(&fit.curve).unwrap();
                    assert_eq!(cert.degree as u32, class.q, "{spec}");
                    assert!(cert.is_rnc, "{spec}");
                    for p in &pts {
                        let x = v.eval(p).unwrap();
                        assert!(fit.curve.incidence(&x).unwrap().passes_through(), "{spec}");
                    }
                    return;
                }
                Err(e) if e.is_genericity() => last = Some(e),
                Err(e) => panic!("{spec}: {e}"),
            }
        }
        panic!("{spec}: no generic sample, last {last:?}");
    }

    #[test]
    fn every_family_fits() {
        check(VarietySpec::Veronese { dim: 2, order: 3 }, 1);
        check(
            VarietySpec::Scroll {
                a: ScrollSpec::new(vec![2, 1]).unwrap(),
            },
            2,
        );
        check(
            VarietySpec::StandardScroll {
                a: ScrollSpec::new(vec![1, 1, 0]).unwrap(),
                rho: 1,
                chi: 1,
            },
            3,
        );
        check(
            VarietySpec::StandardScroll {
                a: ScrollSpec::new(vec![1, 1]).unwrap(),
                rho: 2,
                chi: -1,
            },
            4,
        );
        check(VarietySpec::ConeStandard { r: 2, q: 4 }, 5);
        check(
            VarietySpec::QuadricVeronese {
                r: 2,
                rho: 2,
                rank: 5,
            },
            6,
        );
        check(VarietySpec::SegreSpecial { r: 3, mu: 5 }, 7);
        check(VarietySpec::CubicSpecial { r: 2, mu_prime: 2 }, 8);
        check(VarietySpec::CubicSpecial { r: 2, mu_prime: 1 }, 9);
        check(VarietySpec::CubicSpecial { r: 3, mu_prime: 3 }, 11);
        check(VarietySpec::Veronese33, 10);
    }

    #[test]
    fn cubic_special_through_a_quadratic_extension() {
        let spec = VarietySpec::CubicSpecial { r: 3, mu_prime: 3 };
        let v = make_variety(&spec).unwrap();
        let mut s = Sampler::new(42);
        let mut seen = (false, false);
        for _ in 0..10 {
            let pts: Vec<Vec<Rational>> = (0..4).map(|_| s.vector(4)).collect();
            let Ok(fit) = fit_rnc_through(&spec, &pts) else {
                continue;
            };
            assert_eq!(certify_curve(&fit.curve).unwrap().degree, 5);
            for p in &pts {
                assert!(fit
                    .curve
                    .incidence(&v.eval(p).unwrap())
                    .unwrap()
                    .passes_through());
            }
            match fit.extension {
                Some(_) => seen.0 = true,
                None => seen.1 = true,
            }
        }
        assert!(seen.0, "no sample needed the extension");
    }
}
