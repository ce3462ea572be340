//! Polynomial parametrizations `t ↦ [V_0(t) : … : V_N(t)]` of projective varieties.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::curve::RationalCurve;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::Matrix;
use crate::multiindex::{up_to_degree, MultiIndex};
use crate::poly::Polynomial;
use crate::random::Sampler;
use crate::subspace::{LinearProjection, ProjSubspace};

const JACOBIAN_SEED: u64 = 0x6a61_636f_6269_616e;
const JACOBIAN_TRIES: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    param_dim: usize,
    coords: Vec<Polynomial<Rational>>,
}

impl Parametrization {
    /// Affine chart `x = v(t)` embedded as `[1 : v(t)]`.
    pub fn affine(param_dim: usize, components: Vec<Polynomial<Rational>>) -> Result<Self> {
        let mut coords = vec![Polynomial::one(param_dim)];
        coords.extend(components);
        Self::homogeneous(param_dim, coords)
    }

    /// General homogeneous-coordinate presentation.
    pub fn homogeneous(param_dim: usize, coords: Vec<Polynomial<Rational>>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|c| c.nvars() != param_dim) {
            return Err(Error::Dimension {
                expected: param_dim,
                found: c.nvars(),
            });
        }
        if coords.is_empty() {
            return Err(Error::InvalidParams("no coordinates".into()));
        }
        let p = Parametrization { param_dim, coords };
        p.check_jacobian()?;
        Ok(p)
    }

    fn check_jacobian(&self) -> Result<()> {
        let mut sampler = Sampler::new(JACOBIAN_SEED);
        for _ in 0..JACOBIAN_TRIES {
            let pt = sampler.vector(self.param_dim);
            let rows = self.jet(&pt, 1);
            if Matrix::from_rows(&rows, self.coords.len()).rank() == self.param_dim + 1 {
                return Ok(());
            }
        }
        Err(Error::Genericity(format!(
            "Jacobian rank below {} at {} sampled points",
            self.param_dim, JACOBIAN_TRIES
        )))
    }

    pub fn param_dim(&self) -> usize {
        self.param_dim
    }

    pub fn ambient(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Polynomial<Rational>] {
        &self.coords
    }

    /// Maximal total degree of the coordinates.
    pub fn degree(&self) -> u32 {
        self.coords
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        self.coords.iter().map(|c| c.eval(p)).collect()
    }

    /// Taylor coefficient vectors `v_α(p)` for `|α| ≤ k`, in graded-lex order
    /// of `α`. They span the same space as the partial derivatives.
    pub fn jet(&self, p: &[Rational], k: u32) -> Vec<Vec<Rational>> {
        let shifted: Vec<Polynomial<Rational>> = self
            .coords
            .iter()
            .map(|c| c.taylor_shift(p).expect("point has parameter length"))
            .collect();
        up_to_degree(self.param_dim, k)
            .iter()
            .map(|a| shifted.iter().map(|c| c.coefficient(a)).collect())
            .collect()
    }

    /// Exact partial derivatives `∂^α V(p)` for `|α| ≤ k`.
    pub fn derivative_vectors(&self, p: &[Rational], k: u32) -> Result<Vec<Vec<Rational>>> {
        up_to_degree(self.param_dim, k)
            .iter()
            .map(|a| {
                self.coords
                    .iter()
                    .map(|c| c.partial_derivative(a)?.eval(p))
                    .collect()
            })
            .collect()
    }

    /// Monomials appearing in some coordinate, as rows of coefficients.
    pub fn coefficient_rows(&self) -> Vec<Vec<Rational>> {
        let monos: BTreeSet<MultiIndex> = self
            .coords
            .iter()
            .flat_map(|c| c.terms().map(|(e, _)| e.clone()))
            .collect();
        monos
            .iter()
            .map(|m| self.coords.iter().map(|c| c.coefficient(m)).collect())
            .collect()
    }

    /// Linear span `⟨X⟩`.
    pub fn span(&self) -> ProjSubspace<Rational> {
        ProjSubspace::span_of(self.ambient(), &self.coefficient_rows())
            .expect("rows have ambient length")
    }

    pub fn span_dim(&self) -> isize {
        self.span().dim()
    }

    /// Composition with a linear map of the ambient space.
    pub fn transform(&self, m: &Matrix<Rational>) -> Result<Self> {
        if m.cols() != self.coords.len() {
            return Err(Error::Dimension {
                expected: self.coords.len(),
                found: m.cols(),
            });
        }
        let coords = (0..m.rows())
            .map(|i| {
                let mut acc = Polynomial::zero(self.param_dim);
                for (j, c) in self.coords.iter().enumerate() {
                    if !m[(i, j)].is_zero() {
                        acc = &acc + &c.scale(&m[(i, j)]);
                    }
                }
                acc
            })
            .collect();
        Parametrization::homogeneous(self.param_dim, coords)
    }

    pub fn project(&self, proj: &LinearProjection<Rational>) -> Result<Self> {
        self.transform(&proj.matrix)
    }

    /// Image of a curve of the parameter space. The curve is given in
    /// homogeneous parameter coordinates `[X_0 : X_1 : … : X_d]`, the chart
    /// parameter being `X/X_0`.
    pub fn pushforward<F: Field>(&self, curve: &RationalCurve<F>) -> Result<RationalCurve<F>> {
        if curve.ambient() != self.param_dim {
            return Err(Error::Dimension {
                expected: self.param_dim,
                found: curve.ambient(),
            });
        }
        let x0 = &curve.components()[0];
        let xs = &curve.components()[1..];
        let deg = self.degree();
        let comps = self
            .coords
            .iter()
            .map(|c| c.map(F::from_rational).eval_homogenized(x0, xs, deg))
            .collect::<Result<Vec<_>>>()?;
        RationalCurve::new(comps).normalize()
    }
}
