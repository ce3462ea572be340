//! Quadratic forms, stored through their Gram matrix.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{rat, Field, Rational};
use crate::matrix::Matrix;
use crate::multiindex::MultiIndex;
use crate::poly::Polynomial;

/// `Q(x) = xᵀ G x` with `G` symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    gram: Matrix<Rational>,
}

impl QuadraticForm {
    pub fn from_gram(gram: Matrix<Rational>) -> Result<Self> {
        if gram.rows() != gram.cols() || gram != gram.transpose() {
            return Err(Error::InvalidParams(
                "Gram matrix must be square and symmetric".into(),
            ));
        }
        Ok(QuadraticForm { gram })
    }

    /// `x_0x_1 + x_2x_3 + …`, plus `x_{μ−1}²` when the rank `μ` is odd.
    pub fn hyperbolic(nvars: usize, rank: usize) -> Result<Self> {
        if rank > nvars {
            return Err(Error::InvalidParams(format!(
                "rank {rank} exceeds {nvars} variables"
            )));
        }
        let mut g = Matrix::zeros(nvars, nvars);
        for p in 0..rank / 2 {
            g[(2 * p, 2 * p + 1)] = rat(1, 2);
            g[(2 * p + 1, 2 * p)] = rat(1, 2);
        }
        if rank % 2 == 1 {
            g[(rank - 1, rank - 1)] = rat(1, 1);
        }
        Ok(QuadraticForm { gram: g })
    }

    pub fn nvars(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn bilinear<F: Field>(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, xi) in x.iter().enumerate().take(self.nvars()) {
            for (j, yj) in y.iter().enumerate().take(self.nvars()) {
                let g = &self.gram[(i, j)];
                if g.is_zero() {
                    continue;
                }
                acc += &(F::from_rational(g) * xi.clone() * yj.clone());
            }
        }
        acc
    }

    pub fn eval<F: Field>(&self, x: &[F]) -> F {
        self.bilinear(x, x)
    }

    pub fn polynomial(&self) -> Polynomial<Rational> {
        let n = self.nvars();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                terms.push((MultiIndex(e), self.gram[(i, j)].clone()));
            }
        }
        Polynomial::from_terms(n, terms)
    }

    /// The form on the subspace spanned by the given vectors.
    pub fn restrict<F: Field>(&self, basis: &[Vec<F>]) -> Matrix<F> {
        Matrix::from_fn(basis.len(), basis.len(), |i, j| {
            self.bilinear(&basis[i], &basis[j])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn hyperbolic_rank_and_values() {
        for n in 1..6 {
            for r in 0..=n {
                assert_eq!(QuadraticForm::hyperbolic(n, r).unwrap().rank(), r);
            }
        }
        let q = QuadraticForm::hyperbolic(3, 3).unwrap();
        assert_eq!(q.eval(&[int(2), int(3), int(5)]), int(31));
        assert_eq!(
            q.polynomial().eval(&[int(2), int(3), int(5)]).unwrap(),
            int(31)
        );
    }
}
