use crate::catalog::QuadraticForm;
use crate::curve::{P1Point, RationalCurve};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::upoly::UPoly;

fn bilinear<F: Field>(b: &Matrix<F>, x: &[F], y: &[F]) -> F {
    let bx = b.mul_vec(y);
    x.iter()
        .zip(&bx)
        .fold(F::zero(), |acc, (a, c)| acc + a.clone() * c.clone())
}

/// Stereographic parametrization of the smooth conic `x^T B x = 0` of `P²`
/// from one of its points. With `d(t) = t·e − f`, `e, f` the coordinate
/// vectors off the first nonzero entry of `point`, the line through `point`
/// in direction `d(t)` meets the conic again at `B(d,d)·point − 2B(point,d)·d`.
pub fn parametrize_conic<F: Field>(gram: &Matrix<F>, point: &[F]) -> Result<RationalCurve<F>> {
    if gram.rows() != 3 || gram.cols() != 3 || point.len() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            found: point.len(),
        });
    }
    if gram.determinant().is_zero() {
        return Err(Error::DegenerateCurve("singular conic".into()));
    }
    if !bilinear(gram, point, point).is_zero() {
        return Err(Error::InvalidParams("point is not on the conic".into()));
    }
    let lead = point
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidParams("zero point".into()))?;
    let others: Vec<usize> = (0..3).filter(|&i| i != lead).collect();
    let unit = |i: usize| {
        (0..3)
            .map(|j| if i == j { F::one() } else { F::zero() })
            .collect::<Vec<F>>()
    };
    let (e, f) = (unit(others[0]), unit(others[1]));
    let bdd = UPoly::new(vec![
        bilinear(gram, &f, &f),
        -(bilinear(gram, &e, &f) + bilinear(gram, &e, &f)),
        bilinear(gram, &e, &e),
    ]);
    let bpd = UPoly::new(vec![-bilinear(gram, point, &f), bilinear(gram, point, &e)]);
    let two = F::from_i64(2);
    let comps = (0..3)
        .map(|i| {
            // d_i(t) = t·e_i − f_i
            let di = UPoly::new(vec![-f[i].clone(), e[i].clone()]);
            &bdd.scale(&point[i]) - &(&bpd * &di).scale(&two)
        })
        .collect();
    RationalCurve::new(comps).normalize()
}

/// Gram matrix of the unique conic through five points of `P²`.
pub fn conic_through_five<F: Field>(points: &[Vec<F>]) -> Result<Matrix<F>> {
    if points.len() != 5 {
        return Err(Error::Dimension {
            expected: 5,
            found: points.len(),
        });
    }
    let rows: Vec<Vec<F>> = points.iter().map(|p| veronese2(p)).collect();
    let k = Matrix::from_rows(&rows, 6).kernel();
    if k.len() != 1 {
        return Err(Error::Genericity(
            "five points do not determine a unique conic".into(),
        ));
    }
    let c = &k[0];
    let half = F::one() / F::from_i64(2);
    let gram = Matrix::from_rows(
        &[
            vec![
                c[0].clone(),
                c[1].clone() * half.clone(),
                c[2].clone() * half.clone(),
            ],
            vec![
                c[1].clone() * half.clone(),
                c[3].clone(),
                c[4].clone() * half.clone(),
            ],
            vec![
                c[2].clone() * half.clone(),
                c[4].clone() * half.clone(),
                c[5].clone(),
            ],
        ],
        3,
    );
    if gram.determinant().is_zero() {
        return Err(Error::Genericity(
            "conic through the points is singular".into(),
        ));
    }
    Ok(gram)
}

/// `(x0², x0x1, x0x2, x1², x1x2, x2²)`.
pub(crate) fn veronese2<F: Field>(p: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        for j in i..3 {
            out.push(p[i].clone() * p[j].clone());
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct ConicFit<F> {
    pub curve: RationalCurve<F>,
    pub params: [P1Point<F>; 3],
}

/// The conic cut on a quadric by the plane of three of its points.
pub fn conic_on_quadric<F: Field>(q: &QuadraticForm, points: [&[F]; 3]) -> Result<ConicFit<F>> {
    let basis: Vec<Vec<F>> = points.iter().map(|p| p.to_vec()).collect();
    if basis.iter().any(|p| p.len() != q.nvars()) {
        return Err(Error::Dimension {
            expected: q.nvars(),
            found: basis[0].len(),
        });
    }
    if Matrix::from_rows(&basis, q.nvars()).rank() != 3 {
        return Err(Error::GeneralPosition("points are collinear".into()));
    }
    let b = q.restrict(&basis);
    if (0..3).any(|i| !b[(i, i)].is_zero()) {
        return Err(Error::InvalidParams("point is not on the quadric".into()));
    }
    if b.determinant().is_zero() {
        return Err(Error::Genericity(
            "plane section is not a smooth conic".into(),
        ));
    }
    let plane = parametrize_conic(&b, &[F::one(), F::zero(), F::zero()])?;
    let lift = Matrix::from_fn(q.nvars(), 3, |i, j| basis[j][i].clone());
    let curve = plane.transform(&lift).normalize()?;
    let mut params = Vec::with_capacity(3);
    for p in &basis {
        params.push(
            curve
                .incidence(p)?
                .parameter()
                .ok_or_else(|| Error::DegenerateCurve("point not simply on the conic".into()))?,
        );
    }
    Ok(ConicFit {
        curve,
        params: params.try_into().expect("three points"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, Rational};

    #[test]
    fn stereographic_example() {
        // U0·U1 + U2²
        let gram = Matrix::from_rows(
            &[
                vec![int(0), rat(1, 2), int(0)],
                vec![rat(1, 2), int(0), int(0)],
                vec![int(0), int(0), int(1)],
            ],
            3,
        );
        let c = parametrize_conic(&gram, &[int(1), int(0), int(0)]).unwrap();
        let t = UPoly::<Rational>::x();
        assert_eq!(c.components()[0], UPoly::one());
        assert_eq!(c.components()[1], -&(&t * &t));
        assert_eq!(c.components()[2], t);
    }

    #[test]
    fn five_point_conic_and_quadric_section() {
        let pts: Vec<Vec<Rational>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect();
        let gram = conic_through_five(&pts).unwrap();
        for p in &pts {
            assert!(bilinear(&gram, p, p) == int(0));
        }
        let q = QuadraticForm::from_gram(gram).unwrap();
        let fit = conic_on_quadric(&q, [&pts[3], &pts[4], &pts[0]]).unwrap();
        assert_eq!(fit.curve.degree(), 2);
        for p in &pts {
            assert!(fit.curve.incidence(p).unwrap().passes_through());
        }
        for (p, t) in [&pts[3], &pts[4], &pts[0]].iter().zip(&fit.params) {
            let x = fit.curve.eval_p1(t);
            assert!(Matrix::from_rows(&[x, p.to_vec()], 3).rank() == 1);
        }
    }
}
