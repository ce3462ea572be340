use num_traits::Zero;

use crate::catalog::ScrollSpec;
use crate::curve::RationalCurve;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::Matrix;
use crate::upoly::UPoly;

/// A section `t ↦ (t, P_1/P_0, …, P_r/P_0)` of the scroll chart, with
/// `deg P_k ≤ n − 1 − a_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionFit {
    pub polys: Vec<UPoly<Rational>>,
}

impl SectionFit {
    /// `[P_0 : t·P_0 : P_1 : … : P_r]` in homogeneous chart coordinates.
    pub fn parameter_curve(&self) -> RationalCurve<Rational> {
        let p0 = &self.polys[0];
        let mut comps = vec![p0.clone(), &UPoly::x() * p0];
        comps.extend(self.polys[1..].iter().cloned());
        RationalCurve::new(comps)
    }
}

/// The unique section through `n` chart points `(t_i, s_i)`.
pub fn fit_scroll_section(a: &ScrollSpec, samples: &[Vec<Rational>]) -> Result<SectionFit> {
    let n = a.n() as usize;
    let r = a.r() as usize;
    if samples.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: samples.len(),
        });
    }
    if let Some(p) = samples.iter().find(|p| p.len() != r + 1) {
        return Err(Error::Dimension {
            expected: r + 1,
            found: p.len(),
        });
    }
    for i in 0..n {
        for j in 0..i {
            if samples[i][0] == samples[j][0] {
                return Err(Error::Genericity("two samples share the same t".into()));
            }
        }
    }
    let sizes: Vec<usize> = a.degrees().iter().map(|&ak| n - ak as usize).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let unknowns: usize = sizes.iter().sum();
    // s_k·P_0(t) − P_k(t) = 0 at every sample
    let mut rows = Vec::new();
    for p in samples {
        let powers: Vec<Rational> =
            std::iter::successors(Some(Rational::from_i64(1)), |x| Some(x * &p[0]))
                .take(n)
                .collect();
        for k in 1..=r {
            let mut row = vec![Rational::zero(); unknowns];
            for e in 0..sizes[0] {
                row[offsets[0] + e] = &p[k] * &powers[e];
            }
            for e in 0..sizes[k] {
                row[offsets[k] + e] = -powers[e].clone();
            }
            rows.push(row);
        }
    }
    let kernel = Matrix::from_rows(&rows, unknowns).kernel();
    if kernel.len() != 1 {
        return Err(Error::Genericity(format!(
            "section system has {}-dimensional solution space",
            kernel.len()
        )));
    }
    let sol = &kernel[0];
    let polys: Vec<UPoly<Rational>> = (0..=r)
        .map(|k| UPoly::new(sol[offsets[k]..offsets[k] + sizes[k]].to_vec()))
        .collect();
    if samples.iter().any(|p| polys[0].eval(&p[0]).is_zero()) {
        return Err(Error::Genericity(
            "section passes through a sample at infinity".into(),
        ));
    }
    let fit = SectionFit { polys };
    let c = fit.parameter_curve().normalize()?;
    Ok(SectionFit {
        polys: [&c.components()[..1], &c.components()[2..]].concat(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn plane_scroll_example() {
        let a = ScrollSpec::new(vec![1, 1]).unwrap();
        let pts = vec![
            vec![int(0), int(1)],
            vec![int(1), int(2)],
            vec![int(2), int(5)],
        ];
        let fit = fit_scroll_section(&a, &pts).unwrap();
        // proportional to (t − 3, −t − 3)
        let p0 = &fit.polys[0];
        let p1 = &fit.polys[1];
        let c = p0.lead();
        assert_eq!(
            p0.scale(&(int(1) / c.clone())),
            UPoly::new(vec![int(-3), int(1)])
        );
        assert_eq!(p1.scale(&(int(1) / c)), UPoly::new(vec![int(-3), int(-1)]));
        for p in &pts {
            assert_eq!(p1.eval(&p[0]), &p[1] * &p0.eval(&p[0]));
        }
    }
}
