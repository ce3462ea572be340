//! Closed-form counts: π, the Castelnuovo bound and the sum I(ρ, χ).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiindex::exact_degree;

use super::index_set::ScrollSpec;

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A class `X_{r+1,n}(q)`: dimension `r+1`, carrying degree-`q` rational
/// normal curves through `n` general points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassParams {
    pub r: u32,
    pub n: u32,
    pub q: u32,
}

impl ClassParams {
    pub fn new(r: u32, n: u32, q: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
        }
        if q + 1 < n {
            return Err(Error::InvalidParams(format!(
                "q = {q} below n - 1 = {}",
                n - 1
            )));
        }
        Ok(ClassParams { r, n, q })
    }

    /// `ρ` with `q = ρ(n−1) + m − 1`, `1 ≤ m ≤ n−1`.
    pub fn rho(&self) -> u32 {
        self.q / (self.n - 1)
    }

    pub fn m(&self) -> u32 {
        self.q % (self.n - 1) + 1
    }

    /// `χ = m − 1`, so that `q = ρ(n−1) + χ`.
    pub fn chi(&self) -> i64 {
        self.m() as i64 - 1
    }

    /// The second normalization `(ρ+1, −1)`, available when `m = n−1`.
    pub fn alternate_branch(&self) -> Option<(u32, i64)> {
        (self.m() == self.n - 1).then(|| (self.rho() + 1, -1))
    }

    pub fn pi(&self) -> u64 {
        pi_formula(self.r, self.n, self.q)
    }

    /// Weights `(ρ−1, …, ρ−1, ρ, …, ρ)`: `n−1−m` copies of `ρ−1` then `m` of `ρ`.
    pub fn ponderation(&self) -> Vec<u32> {
        let (rho, m) = (self.rho(), self.m());
        let mut w = vec![rho.saturating_sub(1); (self.n - 1 - m) as usize];
        w.extend(std::iter::repeat_n(rho, m as usize));
        w
    }
}

/// `π_{r,n}(q)`: the projective dimension spanned by a variety of the class.
pub fn pi_formula(r: u32, n: u32, q: u32) -> u64 {
    let c = ClassParams { r, n, q };
    let (rho, m) = (c.rho() as i64, c.m() as i64);
    let (r, n) = (r as i64, n as i64);
    let total =
        m as u128 * binomial(r + rho + 1, r + 1) + (n - 1 - m) as u128 * binomial(r + rho, r + 1);
    (total - 1) as u64
}

/// `g_{r,n}(d)` with `d − 1 = σ(n−1) + m`, `1 ≤ m ≤ n−1`.
pub fn castelnuovo_bound(r: u32, n: u32, d: u32) -> u64 {
    assert!(d >= 1 && n >= 2);
    let step = n as i64 - 1;
    let sigma = (d as i64 - 2).div_euclid(step);
    let m = (d as i64 - 2).rem_euclid(step) + 1;
    let r = r as i64;
    (m as u128 * binomial(sigma + 1, r + 1) + (step - m) as u128 * binomial(sigma, r + 1)) as u64
}

/// `I(ρ, χ) = Σ_{|α| = ρ} (α·a + χ + 1)^+` over `α ∈ N^{r+1}`.
pub fn i_formula(a: &ScrollSpec, rho: u32, chi: i64) -> u64 {
    exact_degree(a.degrees().len(), rho)
        .iter()
        .map(|alpha| {
            let dot: i64 = alpha
                .0
                .iter()
                .zip(a.degrees())
                .map(|(x, y)| *x as i64 * *y as i64)
                .sum();
            (dot + chi + 1).max(0) as u64
        })
        .sum()
}
