//! Verification campaigns turning class membership, projections, specialness
//! and inequivalence into exact pass/fail reports.

mod inequivalence;
mod membership;
mod projection;
mod witness;

pub use inequivalence::{inequivalence_invariants, InequivalenceReport, Relation};
pub use membership::{verify_membership, MembershipReport, SpanCheck, TrialReport};
pub use projection::{
    verify_general_projection, verify_veronese_projection, GeneralProjectionReport,
    ProjectionReport, ProjectionTrial,
};
pub use witness::{
    specialness_witness, ComponentCheck, ControlMeasurement, SpecialnessWitness, WitnessKind,
    WitnessVerdict,
};

use serde::Serialize;

use crate::field::Rational;

/// Genericity failures are retried this many times before a trial is inconclusive.
pub const MAX_ATTEMPTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        }
    }
}

pub(crate) fn point_strings(p: &[Rational]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}
