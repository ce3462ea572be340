use serde::Serialize;

use crate::catalog::{build_a, ScrollSpec};
use crate::error::{Error, Result};
use crate::osculation::contact_locus_dim_monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Relation {
    /// The two index sets coincide.
    Identical,
    /// Swapping the first two variables carries one set onto the other.
    Swap,
    /// Order-`(ρ−1)` contact loci at the origin have different dimensions.
    Separated {
        dim_minus_one: u32,
        dim_alternate: u32,
    },
    /// None of the invariants applies.
    Undecided {
        dim_minus_one: u32,
        dim_alternate: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequivalenceReport {
    pub a: Vec<u32>,
    pub rho: u32,
    pub q: u32,
    pub card_minus_one: usize,
    pub card_alternate: usize,
    pub relation: Relation,
    pub equivalent: Option<bool>,
}

/// Compares the two normalizations `A(ρ, −1)` and `A(ρ−1, n−2)` of the same
/// class `q = ρ(n−1) − 1`.
pub fn inequivalence_invariants(a: &ScrollSpec, rho: u32) -> Result<InequivalenceReport> {
    let n = a.n();
    if rho < 2 || n < 3 {
        return Err(Error::InvalidParams(format!(
            "need ρ ≥ 2 and n ≥ 3, got ρ = {rho}, n = {n}"
        )));
    }
    let r = a.r();
    let first = build_a(a, rho, -1)?;
    let second = build_a(a, rho - 1, n as i64 - 2)?;
    let degrees = a.degrees();
    let (relation, equivalent) = if degrees[0] == n - 1 && first == second {
        (Relation::Identical, Some(true))
    } else if n == 3 && degrees == [1, 1] && first.swap_vars(0, 1) == second {
        (Relation::Swap, Some(true))
    } else {
        let d1 = contact_locus_dim_monomial(&first, rho - 1) as u32;
        let d2 = contact_locus_dim_monomial(&second, rho - 1) as u32;
        if d1 < r && d2 == r {
            (
                Relation::Separated {
                    dim_minus_one: d1,
                    dim_alternate: d2,
                },
                Some(false),
            )
        } else {
            (
                Relation::Undecided {
                    dim_minus_one: d1,
                    dim_alternate: d2,
                },
                None,
            )
        }
    };
    Ok(InequivalenceReport {
        a: degrees.to_vec(),
        rho,
        q: rho * (n - 1) - 1,
        card_minus_one: first.len(),
        card_alternate: second.len(),
        relation,
        equivalent,
    })
}
