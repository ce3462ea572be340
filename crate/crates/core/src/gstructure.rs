//! Tensor structures of type `(r, n)` on an `rn`-dimensional space, given by
//! a distinguished dual basis `(m_{jα})`.
//!
//! Row `j·n + α` of the basis matrix holds the functional `m_{jα}`. A vector
//! `ξ` has tensor coordinates `x_{jα} = m_{jα}(ξ)`.

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::Matrix;
use crate::random::Sampler;
use crate::subspace::ProjSubspace;

#[derive(Clone, Debug, PartialEq)]
pub struct TensorStructure<F> {
    pub r: usize,
    pub n: usize,
    pub m: Matrix<F>,
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

impl<F: Field> TensorStructure<F> {
    pub fn new(r: usize, n: usize, m: Matrix<F>) -> Result<Self> {
        if m.rows() != r * n || m.cols() != r * n {
            return Err(Error::Dimension {
                expected: r * n,
                found: m.rows(),
            });
        }
        if m.rank() != r * n {
            return Err(Error::InvalidParams("dual basis is not invertible".into()));
        }
        Ok(TensorStructure { r, n, m })
    }

    pub fn functional(&self, j: usize, alpha: usize) -> Vec<F> {
        self.m.row(j * self.n + alpha).to_vec()
    }

    /// `u(C^r ⊗ F)` for the hyperplane `F = {Σ t_α y_α = 0}` of `C^n`.
    pub fn type_subspace(&self, t: &[F]) -> Result<ProjSubspace<F>> {
        if t.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: t.len(),
            });
        }
        let eqs: Vec<Vec<F>> = (0..self.r)
            .map(|j| {
                (0..self.r * self.n)
                    .map(|c| {
                        (0..self.n).fold(F::zero(), |acc, a| {
                            acc + t[a].clone() * self.m[(j * self.n + a, c)].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        self.kernel_subspace(eqs)
    }

    /// `u(E ⊗ C^n)` for the hyperplane `E = {Σ c_j z_j = 0}` of `C^r`.
    pub fn dual_type_subspace(&self, c: &[F]) -> Result<ProjSubspace<F>> {
        if c.len() != self.r {
            return Err(Error::Dimension {
                expected: self.r,
                found: c.len(),
            });
        }
        let eqs: Vec<Vec<F>> = (0..self.n)
            .map(|a| {
                (0..self.r * self.n)
                    .map(|col| {
                        (0..self.r).fold(F::zero(), |acc, j| {
                            acc + c[j].clone() * self.m[(j * self.n + a, col)].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        self.kernel_subspace(eqs)
    }

    fn kernel_subspace(&self, eqs: Vec<Vec<F>>) -> Result<ProjSubspace<F>> {
        let rn = self.r * self.n;
        ProjSubspace::span_of(rn - 1, &Matrix::from_rows(&eqs, rn).kernel())
    }
}

/// The unique tensor structure making `n + 1` codimension-`r` subspaces of
/// `Q^{rn}` of type `(r, n−1)`.
pub fn construct_structure<F: Field>(
    r: usize,
    subspaces: &[ProjSubspace<F>],
) -> Result<TensorStructure<F>> {
    if r == 0 || subspaces.len() < 2 {
        return Err(Error::InvalidParams(
            "need r ≥ 1 and at least two subspaces".into(),
        ));
    }
    let n = subspaces.len() - 1;
    let rn = r * n;
    for s in subspaces {
        if s.ambient() + 1 != rn {
            return Err(Error::Dimension {
                expected: rn,
                found: s.ambient() + 1,
            });
        }
        if s.rank() != rn - r {
            return Err(Error::Dimension {
                expected: rn - r,
                found: s.rank(),
            });
        }
    }
    let ann: Vec<Vec<Vec<F>>> = subspaces.iter().map(ProjSubspace::annihilator).collect();
    for s in subsets(n + 1, n) {
        let rows: Vec<Vec<F>> = s.iter().flat_map(|&i| ann[i].iter().cloned()).collect();
        if Matrix::from_rows(&rows, rn).rank() != rn {
            return Err(Error::GeneralPosition(format!(
                "annihilators of subspaces {s:?} do not span the dual"
            )));
        }
    }
    // φ_j = Σ_α m_{jα} with m_{jα} ∈ F_α^⊥
    let blocks = Matrix::from_fn(rn, rn, |i, c| ann[1 + c / r][c % r][i].clone());
    let mut m: Matrix<F> = Matrix::zeros(rn, rn);
    for (j, phi) in ann[0].iter().enumerate() {
        let coeffs = blocks.solve(phi).expect("annihilators form a direct sum");
        for a in 0..n {
            for k in 0..r {
                for col in 0..rn {
                    let v = m[(j * n + a, col)].clone()
                        + coeffs[a * r + k].clone() * ann[a + 1][k][col].clone();
                    m[(j * n + a, col)] = v;
                }
            }
        }
    }
    TensorStructure::new(r, n, m)
}

/// The point `t ∈ P^{n−1}` with `W = u(C^r ⊗ {t = 0})`, if `W` is of type `(r, n−1)`.
pub fn is_type_subspace<F: Field>(
    s: &TensorStructure<F>,
    w: &ProjSubspace<F>,
) -> Result<Option<Vec<F>>> {
    let rn = s.r * s.n;
    if w.ambient() + 1 != rn {
        return Err(Error::Dimension {
            expected: rn,
            found: w.ambient() + 1,
        });
    }
    if w.rank() != rn - s.r {
        return Err(Error::Dimension {
            expected: rn - s.r,
            found: w.rank(),
        });
    }
    // Σ_α t_α m_{jα}(ξ) = 0 for every basis vector ξ and every j
    let mut rows = Vec::new();
    for xi in w.basis_vectors() {
        for j in 0..s.r {
            rows.push(
                (0..s.n)
                    .map(|a| dot(&s.functional(j, a), &xi))
                    .collect::<Vec<F>>(),
            );
        }
    }
    let kernel = Matrix::from_rows(&rows, s.n).kernel();
    if kernel.len() != 1 {
        return Ok(None);
    }
    let t = &kernel[0];
    let scale = F::normalizer(t);
    Ok(Some(t.iter().map(|x| x.clone() * scale.clone()).collect()))
}

/// `(C, A)` with `mB = (C ⊗ A)·mA`, when the transition matrix is of that form.
pub fn grn_relation<F: Field>(
    ma: &TensorStructure<F>,
    mb: &TensorStructure<F>,
) -> Option<(Matrix<F>, Matrix<F>)> {
    if ma.r != mb.r || ma.n != mb.n {
        return None;
    }
    let (r, n) = (ma.r, ma.n);
    let t = &mb.m * &ma.m.inverse()?;
    // R[(j,k), (α,β)] = T[(j,α), (k,β)]
    let reshaped = Matrix::from_fn(r * r, n * n, |jk, ab| {
        t[((jk / r) * n + ab / n, (jk % r) * n + ab % n)].clone()
    });
    if reshaped.rank() != 1 {
        return None;
    }
    let (p, q) = (0..r * r)
        .flat_map(|i| (0..n * n).map(move |j| (i, j)))
        .find(|&(i, j)| !reshaped[(i, j)].is_zero())?;
    let pivot = reshaped[(p, q)].clone();
    let c = Matrix::from_fn(r, r, |j, k| reshaped[(j * r + k, q)].clone());
    let a = Matrix::from_fn(n, n, |x, y| {
        reshaped[(p, x * n + y)].clone() / pivot.clone()
    });
    (c.kron(&a) == t).then_some((c, a))
}

/// `n + 1` random codimension-`r` subspaces of `Q^{rn}`, as kernels of random functionals.
pub fn random_subspaces(sampler: &mut Sampler, r: usize, n: usize) -> Vec<ProjSubspace<Rational>> {
    let rn = r * n;
    (0..=n)
        .map(|_| {
            let ann = sampler.matrix(r, rn);
            ProjSubspace::span_of(rn - 1, &ann.kernel()).expect("kernel vectors have length rn")
        })
        .collect()
}
