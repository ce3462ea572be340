//! Linear subspaces of projective space and projections between them.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A projective subspace of `P^N`, stored as the reduced row-echelon basis of
/// its cone in `F^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjSubspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> ProjSubspace<F> {
    pub fn empty(ambient: usize) -> Self {
        ProjSubspace {
            ambient,
            basis: Matrix::zeros(0, ambient + 1),
            pivots: vec![],
        }
    }

    pub fn whole(ambient: usize) -> Self {
        ProjSubspace {
            ambient,
            basis: Matrix::identity(ambient + 1),
            pivots: (0..=ambient).collect(),
        }
    }

    pub fn span_of(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient + 1) {
            return Err(Error::Dimension {
                expected: ambient + 1,
                found: v.len(),
            });
        }
        let (r, pivots) = Matrix::from_rows(vectors, ambient + 1).rref();
        let rows: Vec<Vec<F>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(ProjSubspace {
            ambient,
            basis: Matrix::from_rows(&rows, ambient + 1),
            pivots,
        })
    }

    /// Coordinate subspace spanned by the given unit vectors.
    pub fn coordinate(ambient: usize, coords: &[usize]) -> Self {
        let vecs: Vec<Vec<F>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![F::zero(); ambient + 1];
                v[c] = F::one();
                v
            })
            .collect();
        Self::span_of(ambient, &vecs).expect("coordinate index in range")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; `-1` for the empty subspace.
    pub fn dim(&self) -> isize {
        self.pivots.len() as isize - 1
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.ambient != o.ambient {
            return Err(Error::Dimension {
                expected: self.ambient,
                found: o.ambient,
            });
        }
        Ok(())
    }

    pub fn join(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut v = self.basis_vectors();
        v.extend(o.basis_vectors());
        Self::span_of(self.ambient, &v)
    }

    pub fn intersect(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let (a, b) = (self.rank(), o.rank());
        if a == 0 || b == 0 {
            return Ok(Self::empty(self.ambient));
        }
        // x = Σ λ_i A_i = Σ μ_j B_j  ⇔  (λ, μ) in the kernel of [A^T | -B^T]
        let n = self.ambient + 1;
        let m = Matrix::from_fn(n, a + b, |i, j| {
            if j < a {
                self.basis[(j, i)].clone()
            } else {
                -o.basis[(j - a, i)].clone()
            }
        });
        let vecs: Vec<Vec<F>> = m
            .kernel()
            .into_iter()
            .map(|k| {
                let mut x = vec![F::zero(); n];
                for (j, lam) in k.iter().take(a).enumerate() {
                    if lam.is_zero() {
                        continue;
                    }
                    for (i, xi) in x.iter_mut().enumerate() {
                        let mut t = self.basis[(j, i)].clone();
                        t *= lam;
                        *xi += &t;
                    }
                }
                x
            })
            .collect();
        Self::span_of(self.ambient, &vecs)
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        let mut rows = self.basis_vectors();
        rows.push(v.to_vec());
        Matrix::from_rows(&rows, self.ambient + 1).rank() == self.rank()
    }

    pub fn contains(&self, o: &Self) -> bool {
        o.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    /// Image under a linear map `F^{N+1} → F^{M+1}` given as an `(M+1)×(N+1)` matrix.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        let vecs: Vec<Vec<F>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Self::span_of(m.rows() - 1, &vecs).expect("matrix rows fix the target dimension")
    }

    /// Linear functionals vanishing on the subspace, one per row.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        if self.rank() == 0 {
            return (0..=self.ambient)
                .map(|i| {
                    let mut v = vec![F::zero(); self.ambient + 1];
                    v[i] = F::one();
                    v
                })
                .collect();
        }
        self.basis.kernel()
    }
}

/// Join of the parts if it is a projective direct sum.
pub fn direct_sum<F: Field>(parts: &[ProjSubspace<F>]) -> Result<ProjSubspace<F>> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidParams("direct sum of no subspaces".into()));
    };
    let mut join = ProjSubspace::empty(first.ambient);
    let mut expected = 0usize;
    for p in parts {
        join = join.join(p)?;
        expected += p.rank();
    }
    if join.rank() != expected {
        return Err(Error::NotDirectSum {
            expected: expected as isize - 1,
            found: join.dim(),
        });
    }
    Ok(join)
}

/// Projection from a center onto the coordinate subspace of the non-pivot
/// columns of the center's echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProjection<F> {
    pub center: ProjSubspace<F>,
    pub target_complement: ProjSubspace<F>,
    /// Coordinates of the complement, in increasing order.
    pub kept: Vec<usize>,
    /// `kept.len() × (N+1)`; kills the center.
    pub matrix: Matrix<F>,
}

impl<F: Field> LinearProjection<F> {
    pub fn from_center(center: &ProjSubspace<F>) -> Result<Self> {
        let n = center.ambient + 1;
        if center.rank() == n {
            return Err(Error::NoProjection);
        }
        let kept: Vec<usize> = (0..n).filter(|c| !center.pivots.contains(c)).collect();
        // x ↦ x - Σ x_{p_i} row_i, read on the kept coordinates
        let matrix = Matrix::from_fn(kept.len(), n, |i, j| {
            let k = kept[i];
            if let Some(r) = center.pivots.iter().position(|&p| p == j) {
                -center.basis[(r, k)].clone()
            } else if j == k {
                F::one()
            } else {
                F::zero()
            }
        });
        Ok(LinearProjection {
            center: center.clone(),
            target_complement: ProjSubspace::coordinate(center.ambient, &kept),
            kept,
            matrix,
        })
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.mul_vec(v)
    }

    /// Embeds a target vector back into the ambient space as a complement vector.
    pub fn include(&self, w: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.center.ambient + 1];
        for (c, x) in self.kept.iter().zip(w) {
            v[*c] = x.clone();
        }
        v
    }

    pub fn target_dim(&self) -> usize {
        self.kept.len() - 1
    }
}

pub fn projection_from<F: Field>(
    center: &ProjSubspace<F>,
    ambient: usize,
) -> Result<LinearProjection<F>> {
    if center.ambient != ambient {
        return Err(Error::Dimension {
            expected: ambient,
            found: center.ambient,
        });
    }
    LinearProjection::from_center(center)
}
