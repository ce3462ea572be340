//! Scroll degree vectors and the index sets of monomial varieties.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::multiindex::{up_to_degree, MultiIndex};
use crate::param::Parametrization;
use crate::poly::Polynomial;
use crate::subspace::ProjSubspace;

/// Degrees `a_0 ≥ … ≥ a_r ≥ 0` of a rational normal scroll.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ScrollSpec(Vec<u32>);

impl ScrollSpec {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidParams("empty scroll degree vector".into()));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "scroll degrees {degrees:?} not non-increasing"
            )));
        }
        if degrees[0] == 0 {
            return Err(Error::InvalidParams("scroll degrees all zero".into()));
        }
        Ok(ScrollSpec(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn r(&self) -> u32 {
        self.0.len() as u32 - 1
    }

    /// `n = a_0 + … + a_r + 1`.
    pub fn n(&self) -> u32 {
        self.0.iter().sum::<u32>() + 1
    }

    /// Every scroll vector with `r+1` entries summing to `n−1`.
    pub fn all(r: u32, n: u32) -> Vec<ScrollSpec> {
        fn rec(left: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<ScrollSpec>) {
            if slots == 0 {
                if left == 0 {
                    out.push(ScrollSpec(cur.clone()));
                }
                return;
            }
            for v in (0..=max.min(left)).rev() {
                cur.push(v);
                rec(left - v, v, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n - 1, n - 1, r as usize + 1, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for ScrollSpec {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        ScrollSpec::new(v)
    }
}

impl From<ScrollSpec> for Vec<u32> {
    fn from(s: ScrollSpec) -> Vec<u32> {
        s.0
    }
}

/// A finite set of nonzero exponent vectors, kept in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    nvars: usize,
    indices: Vec<MultiIndex>,
}

impl IndexSet {
    pub fn new(nvars: usize, indices: impl IntoIterator<Item = MultiIndex>) -> Result<Self> {
        let set: BTreeSet<MultiIndex> = indices.into_iter().collect();
        for i in &set {
            if i.len() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: i.len(),
                });
            }
            if i.is_zero() {
                return Err(Error::InvalidParams(
                    "index sets exclude the zero index".into(),
                ));
            }
        }
        Ok(IndexSet {
            nvars,
            indices: set.into_iter().collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn contains(&self, i: &MultiIndex) -> bool {
        self.indices.binary_search(i).is_ok()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.indices.iter().all(|i| {
            (0..self.nvars).all(|v| {
                if i.0[v] == 0 {
                    return true;
                }
                let mut j = i.clone();
                j.0[v] -= 1;
                j.is_zero() || self.contains(&j)
            })
        })
    }

    pub fn contains_units(&self) -> bool {
        (0..self.nvars).all(|v| self.contains(&MultiIndex::unit(self.nvars, v)))
    }

    /// Swaps two variables in every index.
    pub fn swap_vars(&self, a: usize, b: usize) -> IndexSet {
        let swapped = self.indices.iter().map(|i| {
            let mut j = i.clone();
            j.0.swap(a, b);
            j
        });
        IndexSet::new(self.nvars, swapped).expect("swap keeps shape")
    }

    /// The monomial chart `t ↦ (t^i)_{i ∈ A}`.
    pub fn parametrization(&self) -> Result<Parametrization> {
        let comps = self
            .indices
            .iter()
            .map(|i| Polynomial::monomial(i.clone(), Rational::from_integer(1.into())))
            .collect();
        Parametrization::affine(self.nvars, comps)
    }

    /// Osculating space of order `k` at the origin: the coordinate span of
    /// the constant coordinate and the indices of degree `≤ k`.
    pub fn osculator_at_origin(&self, k: u32) -> ProjSubspace<Rational> {
        let mut coords = vec![0];
        coords.extend(
            self.indices
                .iter()
                .enumerate()
                .filter(|(_, i)| i.degree() <= k)
                .map(|(c, _)| c + 1),
        );
        ProjSubspace::coordinate(self.indices.len(), &coords)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `A(ρ, χ)`: indices `(k, α)` with `|α| ≤ ρ` and
/// `k ≤ (ρ − |α|)a_0 + Σ_j α_j a_j + χ`.
pub fn build_a(a: &ScrollSpec, rho: u32, chi: i64) -> Result<IndexSet> {
    let n = a.n() as i64;
    if rho < 1 {
        return Err(Error::InvalidParams("ρ must be at least 1".into()));
    }
    if chi < -1 || chi > n - 2 {
        return Err(Error::InvalidParams(format!(
            "χ = {chi} outside [-1, {}]",
            n - 2
        )));
    }
    if rho as i64 * (n - 1) + chi < n - 1 {
        return Err(Error::InvalidParams(format!(
            "(ρ, χ) = ({rho}, {chi}) gives q below n - 1"
        )));
    }
    let deg = a.degrees();
    let r = deg.len() - 1;
    let mut out = Vec::new();
    for alpha in up_to_degree(r, rho) {
        let size = alpha.degree() as i64;
        let bound = (rho as i64 - size) * deg[0] as i64
            + alpha
                .0
                .iter()
                .zip(&deg[1..])
                .map(|(x, y)| *x as i64 * *y as i64)
                .sum::<i64>()
            + chi;
        for k in 0..=bound.max(-1) {
            let mut e = vec![k as u32];
            e.extend(&alpha.0);
            let idx = MultiIndex(e);
            if !idx.is_zero() {
                out.push(idx);
            }
        }
    }
    IndexSet::new(r + 1, out)
}

/// `A(q)` for cones over Veronese surfaces: `(i, j, α) ∈ N² × N^{r−1}` with
/// `1 ≤ 2(i+j) + 4|α| ≤ q`.
pub fn build_a_cone(r: u32, q: u32) -> Result<IndexSet> {
    if !q.is_multiple_of(2) || q < 4 {
        return Err(Error::InvalidParams(format!(
            "cone index sets need even q ≥ 4, got {q}"
        )));
    }
    if r < 1 {
        return Err(Error::InvalidParams("cone index sets need r ≥ 1".into()));
    }
    let nvars = r as usize + 1;
    let out = up_to_degree(nvars, q / 2).into_iter().filter(|e| {
        let w = 2 * (e.0[0] + e.0[1]) + 4 * e.0[2..].iter().sum::<u32>();
        (1..=q).contains(&w)
    });
    IndexSet::new(nvars, out)
}
