//! Exact computations with osculating spaces, rational normal curves and the
//! varieties of dimension `r+1` that carry a degree-`q` rational normal curve
//! through `n` general points.
//!
//! Arithmetic is exact throughout. The generic algorithms work over any
//! [`Field`]; the aliases below fix the rationals.

pub mod catalog;
pub mod curve;
pub mod error;
pub mod field;
pub mod gstructure;
pub mod hitting;
pub mod matrix;
pub mod multiindex;
pub mod osculation;
pub mod param;
pub mod poly;
pub mod random;
pub mod rnc;
pub mod subspace;
pub mod upoly;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, QuadExt, Rational};
pub use multiindex::MultiIndex;
pub use param::Parametrization;

pub type QPoly = poly::Polynomial<Rational>;
pub type QUPoly = upoly::UPoly<Rational>;
pub type QMatrix = matrix::Matrix<Rational>;
pub type QSubspace = subspace::ProjSubspace<Rational>;
pub type QCurve = curve::RationalCurve<Rational>;
