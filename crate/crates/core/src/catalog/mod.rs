//! Formulas, index sets and constructors for every family.

pub mod formulas;
pub mod index_set;
pub mod quadratic;
pub mod spec;
pub mod varieties;

pub use formulas::{binomial, castelnuovo_bound, i_formula, pi_formula, ClassParams};
pub use index_set::{build_a, build_a_cone, IndexSet, ScrollSpec};
pub use quadratic::QuadraticForm;
pub use spec::{SpecDocument, VarietySpec};
pub use varieties::{chart_form, graph_quadric, index_set_of, make_variety};
