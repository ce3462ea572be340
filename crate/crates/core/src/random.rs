//! Seeded sampling of small-height rationals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{rat, Rational};
use crate::matrix::Matrix;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Numerator in [-9, 9], denominator in {1, 2, 3}.
    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-9i64..=9);
        let d = self.rng.gen_range(1i64..=3);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if q != rat(0, 1) {
                return q;
            }
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        let data: Vec<Vec<Rational>> = (0..rows).map(|_| self.vector(cols)).collect();
        Matrix::from_rows(&data, cols)
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Matrix<Rational> {
        loop {
            let m = self.matrix(n, n);
            if m.inverse().is_some() {
                return m;
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

/// Independent per-trial seed, stable across runs.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
