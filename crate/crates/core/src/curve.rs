//! Rational curves `P^1 → P^N` given by polynomial homogeneous components.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::ProjSubspace;
use crate::upoly::UPoly;

/// A point `[x : y]` of the parameter line; the affine parameter is `x/y`.
#[derive(Clone, Debug, PartialEq)]
pub struct P1Point<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> P1Point<F> {
    pub fn finite(t: F) -> Self {
        P1Point { x: t, y: F::one() }
    }

    pub fn infinity() -> Self {
        P1Point {
            x: F::one(),
            y: F::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.y.is_zero()
    }

    pub fn affine(&self) -> Option<F> {
        (!self.y.is_zero()).then(|| self.x.clone() / self.y.clone())
    }

    pub fn same_as(&self, o: &Self) -> bool {
        self.x.clone() * o.y.clone() == self.y.clone() * o.x.clone()
    }
}

/// The Möbius map sending `src[i]` to `dst[i]` for three distinct points,
/// as a 2×2 matrix acting on `(x, y)` columns.
pub fn moebius_through<F: Field>(
    src: &[P1Point<F>; 3],
    dst: &[P1Point<F>; 3],
) -> Result<Matrix<F>> {
    // (a x + b y) y' - (c x + d y) x' = 0 for each pair
    let rows: Vec<Vec<F>> = src
        .iter()
        .zip(dst)
        .map(|(s, d)| {
            vec![
                s.x.clone() * d.y.clone(),
                s.y.clone() * d.y.clone(),
                -(s.x.clone() * d.x.clone()),
                -(s.y.clone() * d.x.clone()),
            ]
        })
        .collect();
    let k = Matrix::from_rows(&rows, 4).kernel();
    if k.len() != 1 {
        return Err(Error::Genericity(
            "Möbius data not three distinct point pairs".into(),
        ));
    }
    let m = Matrix::from_rows(&[k[0][..2].to_vec(), k[0][2..].to_vec()], 2);
    if m.determinant().is_zero() {
        return Err(Error::Genericity("degenerate Möbius map".into()));
    }
    Ok(m)
}

/// Where a point sits on a curve: common roots of all 2×2 minors, plus a flag
/// for the parameter at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct Incidence<F> {
    pub finite: UPoly<F>,
    pub at_infinity: bool,
}

impl<F: Field> Incidence<F> {
    pub fn passes_through(&self) -> bool {
        self.at_infinity || self.finite.degree().is_some_and(|d| d >= 1)
    }

    /// The unique parameter mapping to the point, when the finite part is a
    /// single linear factor or the point sits only at infinity.
    pub fn parameter(&self) -> Option<P1Point<F>> {
        match (self.finite.degree(), self.at_infinity) {
            (Some(1), false) => {
                let m = self.finite.monic();
                Some(P1Point::finite(-m.coeff(0)))
            }
            (Some(0), true) => Some(P1Point::infinity()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RationalCurve<F> {
    components: Vec<UPoly<F>>,
}

impl<F: Field> RationalCurve<F> {
    pub fn new(components: Vec<UPoly<F>>) -> Self {
        RationalCurve { components }
    }

    pub fn components(&self) -> &[UPoly<F>] {
        &self.components
    }

    pub fn ambient(&self) -> usize {
        self.components.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(UPoly::is_zero)
    }

    /// Maximal component degree.
    pub fn degree(&self) -> usize {
        self.components
            .iter()
            .filter_map(UPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Removes the common factor and the scalar content.
    pub fn normalize(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DegenerateCurve("all components vanish".into()));
        }
        let g = self
            .components
            .iter()
            .fold(UPoly::zero(), |acc, c| acc.gcd(c));
        let divided: Vec<UPoly<F>> = self
            .components
            .iter()
            .map(|c| c.div_exact(&g).expect("gcd divides every component"))
            .collect();
        let lead = divided
            .iter()
            .find(|c| !c.is_zero())
            .map(UPoly::lead)
            .expect("nonzero component");
        let mut values = vec![lead];
        for c in &divided {
            values.extend(c.coeffs().iter().cloned());
        }
        let s = F::normalizer(&values);
        Ok(RationalCurve {
            components: divided.iter().map(|c| c.scale(&s)).collect(),
        })
    }

    pub fn eval(&self, t: &F) -> Vec<F> {
        self.components.iter().map(|c| c.eval(t)).collect()
    }

    /// Value at a homogeneous parameter, using the curve degree as the
    /// homogenizing degree.
    pub fn eval_p1(&self, p: &P1Point<F>) -> Vec<F> {
        let d = self.degree();
        let mut xp = vec![F::one()];
        let mut yp = vec![F::one()];
        for _ in 0..d {
            xp.push(xp.last().unwrap().clone() * p.x.clone());
            yp.push(yp.last().unwrap().clone() * p.y.clone());
        }
        self.components
            .iter()
            .map(|c| {
                let mut acc = F::zero();
                for (i, a) in c.coeffs().iter().enumerate() {
                    acc += &(a.clone() * xp[i].clone() * yp[d - i].clone());
                }
                acc
            })
            .collect()
    }

    /// `τ ↦ self(M·[τ : 1])`, homogenized in the curve degree.
    pub fn reparametrize(&self, m: &Matrix<F>) -> Self {
        let d = self.degree();
        let num = UPoly::new(vec![m[(0, 1)].clone(), m[(0, 0)].clone()]);
        let den = UPoly::new(vec![m[(1, 1)].clone(), m[(1, 0)].clone()]);
        let np: Vec<UPoly<F>> = (0..=d).map(|i| num.pow(i as u32)).collect();
        let dp: Vec<UPoly<F>> = (0..=d).map(|i| den.pow(i as u32)).collect();
        let comps = self
            .components
            .iter()
            .map(|c| {
                let mut acc = UPoly::zero();
                for (i, a) in c.coeffs().iter().enumerate() {
                    acc = &acc + &(&np[i] * &dp[d - i]).scale(a);
                }
                acc
            })
            .collect();
        RationalCurve { components: comps }
    }

    /// Applies a linear map of the ambient space.
    pub fn transform(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.components.len());
        let comps = (0..m.rows())
            .map(|i| {
                let mut acc = UPoly::zero();
                for (j, c) in self.components.iter().enumerate() {
                    if !m[(i, j)].is_zero() {
                        acc = &acc + &c.scale(&m[(i, j)]);
                    }
                }
                acc
            })
            .collect();
        RationalCurve { components: comps }
    }

    /// Coefficient matrix: one row per power of t, one column per coordinate.
    pub fn coefficient_rows(&self) -> Vec<Vec<F>> {
        (0..=self.degree())
            .map(|i| self.components.iter().map(|c| c.coeff(i)).collect())
            .collect()
    }

    /// Linear span `⟨C⟩`.
    pub fn span(&self) -> ProjSubspace<F> {
        ProjSubspace::span_of(self.ambient(), &self.coefficient_rows())
            .expect("rows have ambient length")
    }

    /// Taylor coefficient vectors of orders `0..=k` at the finite parameter `t`.
    pub fn jet(&self, t: &F, k: usize) -> Vec<Vec<F>> {
        let shifted: Vec<UPoly<F>> = self.components.iter().map(|c| c.shift(t)).collect();
        (0..=k)
            .map(|i| shifted.iter().map(|c| c.coeff(i)).collect())
            .collect()
    }

    /// Osculating space of order `k` at the finite parameter `t`.
    pub fn osculator(&self, t: &F, k: usize) -> ProjSubspace<F> {
        ProjSubspace::span_of(self.ambient(), &self.jet(t, k))
            .expect("jet vectors have ambient length")
    }

    pub fn incidence(&self, point: &[F]) -> Result<Incidence<F>> {
        if point.len() != self.components.len() {
            return Err(Error::Dimension {
                expected: self.components.len(),
                found: point.len(),
            });
        }
        let Some(i0) = point.iter().position(|x| !x.is_zero()) else {
            return Err(Error::InvalidParams(
                "zero vector is not a projective point".into(),
            ));
        };
        let ci = &self.components[i0];
        let mut g = UPoly::zero();
        for (j, pj) in point.iter().enumerate() {
            if j == i0 {
                continue;
            }
            let minor = &self.components[j].scale(&point[i0]) - &ci.scale(pj);
            g = g.gcd(&minor);
        }
        let d = self.degree();
        let lead: Vec<F> = self.components.iter().map(|c| c.coeff(d)).collect();
        let at_infinity = (0..lead.len())
            .all(|j| lead[j].clone() * point[i0].clone() == lead[i0].clone() * point[j].clone());
        if g.is_zero() {
            return Err(Error::DegenerateCurve(
                "curve is constant at the tested point".into(),
            ));
        }
        Ok(Incidence {
            finite: g,
            at_infinity,
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalCurve<G> {
        RationalCurve {
            components: self.components.iter().map(|c| c.map(&f)).collect(),
        }
    }
}

impl<F: Field + fmt::Display> fmt::Display for RationalCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    fn p(c: &[i64]) -> UPoly<Rational> {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn normalization() {
        let c = RationalCurve::new(vec![p(&[0, 0, 2]), p(&[0, 0, 0, 2])]);
        assert_eq!(
            c.normalize().unwrap(),
            RationalCurve::new(vec![p(&[1]), p(&[0, 1])])
        );
        let c = RationalCurve::new(vec![p(&[-1, 0, 1]), p(&[-1, 1])]);
        let n = c.normalize().unwrap();
        assert_eq!(n, RationalCurve::new(vec![p(&[1, 1]), p(&[1])]));
        assert_eq!(n.normalize().unwrap(), n);
        assert!(RationalCurve::new(vec![p(&[]), p(&[])])
            .normalize()
            .is_err());
        let c = RationalCurve::new(vec![p(&[0, -3]), p(&[6])]);
        assert_eq!(
            c.normalize().unwrap(),
            RationalCurve::new(vec![p(&[0, 1]), p(&[-2])])
        );
    }

    #[test]
    fn incidence_on_twisted_cubic() {
        let c = RationalCurve::new(vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1]), p(&[0, 0, 0, 1])]);
        let inc = c.incidence(&[int(2), int(4), int(8), int(16)]).unwrap();
        assert_eq!(inc.parameter(), Some(P1Point::finite(int(2))));
        let inf = c.incidence(&[int(0), int(0), int(0), int(5)]).unwrap();
        assert_eq!(inf.parameter(), Some(P1Point::infinity()));
        assert!(!c
            .incidence(&[int(1), int(1), int(1), int(2)])
            .unwrap()
            .passes_through());
    }

    #[test]
    fn moebius_three_points() {
        let src = [
            P1Point::finite(int(0)),
            P1Point::infinity(),
            P1Point::finite(int(1)),
        ];
        let dst = [
            P1Point::finite(int(2)),
            P1Point::finite(int(3)),
            P1Point::finite(int(-1)),
        ];
        let m = moebius_through(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            let v = m.mul_vec(&[s.x.clone(), s.y.clone()]);
            assert!(P1Point {
                x: v[0].clone(),
                y: v[1].clone()
            }
            .same_as(d));
        }
    }

    #[test]
    fn reparametrization_tracks_points() {
        let c = RationalCurve::new(vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]);
        let m = Matrix::from_rows(&[vec![int(2), int(1)], vec![int(1), int(1)]], 2);
        let r = c.reparametrize(&m);
        // τ = 1 maps to 3/2
        let v = r.eval(&int(1));
        let w = c.eval(&crate::field::rat(3, 2));
        assert!((0..3).all(|i| v[i].clone() * w[0].clone() == w[i].clone() * v[0].clone()));
    }
}
