//! Rational normal curves: certification, interpolation and fits on every family.

mod conic;
mod fit;
mod interpolate;
mod section;

pub use conic::{conic_on_quadric, conic_through_five, parametrize_conic, ConicFit};
pub use fit::{fit_rnc_through, RncFit};
pub use interpolate::{rnc_through_points, FrameChoice, RncThrough};
pub use section::{fit_scroll_section, SectionFit};

use serde::Serialize;

use crate::curve::RationalCurve;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveCertificate {
    pub degree: usize,
    pub span_dim: usize,
    pub is_rnc: bool,
}

/// Degree and span of a normalized curve; a rational normal curve is one
/// whose degree equals the dimension it spans.
pub fn certify_curve<F: Field>(c: &RationalCurve<F>) -> Result<CurveCertificate> {
    let c = c.normalize()?;
    let degree = c.degree();
    if degree == 0 {
        return Err(Error::DegenerateCurve("constant curve".into()));
    }
    let span_dim = c.span().dim() as usize;
    Ok(CurveCertificate {
        degree,
        span_dim,
        is_rnc: degree == span_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};
    use crate::upoly::UPoly;

    fn mono(i: usize) -> UPoly<Rational> {
        let mut c = vec![int(0); i + 1];
        c[i] = int(1);
        UPoly::new(c)
    }

    #[test]
    fn certificates() {
        let cubic = RationalCurve::new((0..4).map(mono).collect());
        assert_eq!(
            certify_curve(&cubic).unwrap(),
            CurveCertificate {
                degree: 3,
                span_dim: 3,
                is_rnc: true
            }
        );
        let quartic = RationalCurve::new(vec![mono(0), mono(1), mono(2), mono(4)]);
        assert_eq!(
            certify_curve(&quartic).unwrap(),
            CurveCertificate {
                degree: 4,
                span_dim: 3,
                is_rnc: false
            }
        );
        let constant = RationalCurve::new(vec![mono(0), UPoly::constant(int(3))]);
        assert!(certify_curve(&constant).is_err());
    }
}
