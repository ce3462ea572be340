use num_traits::{One, Zero};

use crate::curve::{P1Point, RationalCurve};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::Matrix;
use crate::upoly::UPoly;

/// Free choices in the frame construction; any choice yields the same curve.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameChoice {
    /// Which input points play the roles of simplex, unit point and last
    /// point, in that order. Must be a permutation of `0..d+3`.
    pub order: Vec<usize>,
    /// The last point sits at parameter `u`.
    pub u: Rational,
    /// Scale of the parameter; nodes are `u − 1/(κ w_i)`.
    pub kappa: Rational,
}

impl FrameChoice {
    pub fn standard(d: usize) -> Self {
        FrameChoice {
            order: (0..d + 3).collect(),
            u: Rational::zero(),
            kappa: Rational::one(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RncThrough<F> {
    pub curve: RationalCurve<F>,
    /// Parameter of each input point, in input order.
    pub params: Vec<P1Point<F>>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// The rational normal curve of degree `d` through `d+3` points of `P^d` in
/// general position.
pub fn rnc_through_points<F: Field>(
    d: usize,
    points: &[Vec<F>],
    choice: &FrameChoice,
) -> Result<RncThrough<F>> {
    if points.len() != d + 3 {
        return Err(Error::Dimension {
            expected: d + 3,
            found: points.len(),
        });
    }
    if let Some(p) = points.iter().find(|p| p.len() != d + 1) {
        return Err(Error::Dimension {
            expected: d + 1,
            found: p.len(),
        });
    }
    for s in subsets(d + 3, d + 1) {
        let m = Matrix::from_rows(
            &s.iter().map(|&i| points[i].clone()).collect::<Vec<_>>(),
            d + 1,
        );
        if m.determinant().is_zero() {
            return Err(Error::GeneralPosition(format!(
                "points {s:?} are linearly dependent"
            )));
        }
    }
    let mut sorted = choice.order.clone();
    sorted.sort_unstable();
    if sorted != (0..d + 3).collect::<Vec<_>>() || choice.kappa.is_zero() {
        return Err(Error::InvalidParams(
            "frame choice must permute the points, with κ ≠ 0".into(),
        ));
    }
    let pts: Vec<&Vec<F>> = choice.order.iter().map(|&i| &points[i]).collect();

    // columns of `frame` are λ_i p_i, with Σ λ_i p_i = unit point
    let simplex = Matrix::from_fn(d + 1, d + 1, |i, j| pts[j][i].clone());
    let lambda = simplex.solve(pts[d + 1]).expect("simplex is invertible");
    let frame = Matrix::from_fn(d + 1, d + 1, |i, j| pts[j][i].clone() * lambda[j].clone());
    let w = frame
        .inverse()
        .expect("frame is invertible")
        .mul_vec(pts[d + 2]);

    let u = F::from_rational(&choice.u);
    let kappa = F::from_rational(&choice.kappa);
    let nodes: Vec<F> = w
        .iter()
        .map(|wi| u.clone() - F::one() / (kappa.clone() * wi.clone()))
        .collect();
    let comps: Vec<UPoly<F>> = (0..=d)
        .map(|i| {
            (0..=d)
                .filter(|&j| j != i)
                .fold(UPoly::one(), |acc, j| &acc * &UPoly::linear_root(&nodes[j]))
        })
        .collect();
    let curve = RationalCurve::new(comps).transform(&frame).normalize()?;

    let mut params = vec![P1Point::infinity(); d + 3];
    for (slot, &i) in choice.order.iter().enumerate() {
        params[i] = match slot {
            s if s <= d => P1Point::finite(nodes[s].clone()),
            s if s == d + 1 => P1Point::infinity(),
            _ => P1Point::finite(u.clone()),
        };
    }
    Ok(RncThrough { curve, params })
}
