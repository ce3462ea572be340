//! Sparse multivariate polynomials with graded-lex canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::multiindex::MultiIndex;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, F>,
}

fn binomial_coeffs(e: u32) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..e {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), F::one())
    }

    pub fn monomial(exp: MultiIndex, c: F) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, F)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: MultiIndex, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &MultiIndex) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    pub fn leading(&self) -> Option<(&MultiIndex, &F)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut c = c.clone();
            c *= s;
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: len,
            });
        }
        Ok(())
    }

    /// Iterated partial derivative `∂^index`.
    pub fn partial_derivative(&self, index: &MultiIndex) -> Result<Self> {
        self.check_len(index.len())?;
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let Some(rest) = e.checked_sub(index) else {
                continue;
            };
            let mut factor = 1i64;
            for (ei, ki) in e.0.iter().zip(&index.0) {
                for j in 0..*ki {
                    factor *= (*ei - j) as i64;
                }
            }
            out.add_term(rest, c.clone() * F::from_i64(factor));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[F]) -> Result<F> {
        self.check_len(point.len())?;
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `subs[i]` for the i-th variable.
    pub fn compose(&self, subs: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        self.check_len(subs.len())?;
        let m = subs.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(m);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(m, c.clone());
            for (s, &k) in subs.iter().zip(&e.0) {
                if k > 0 {
                    t = &t * &s.pow(k);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `self(x + shift)`, expanded in the same variables.
    pub fn taylor_shift(&self, shift: &[F]) -> Result<Self> {
        self.check_len(shift.len())?;
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            // expand each (x_i + p_i)^{e_i} and multiply out
            let mut partial: Vec<(Vec<u32>, F)> = vec![(Vec::with_capacity(self.nvars), c.clone())];
            for (i, &k) in e.0.iter().enumerate() {
                let binom = binomial_coeffs(k);
                let mut powers = vec![F::one()];
                for _ in 0..k {
                    let mut next = powers.last().unwrap().clone();
                    next *= &shift[i];
                    powers.push(next);
                }
                let mut next = Vec::with_capacity(partial.len() * (k as usize + 1));
                for (exp, coef) in &partial {
                    for j in 0..=k {
                        let p = &powers[(k - j) as usize];
                        if p.is_zero() {
                            continue;
                        }
                        let mut v = coef.clone();
                        v *= p;
                        v *= &F::from_rational(&crate::field::Rational::from_integer(
                            binom[j as usize].into(),
                        ));
                        let mut ex = exp.clone();
                        ex.push(j);
                        next.push((ex, v));
                    }
                }
                partial = next;
            }
            for (exp, v) in partial {
                out.add_term(MultiIndex(exp), v);
            }
        }
        Ok(out)
    }

    /// `x0^deg · self(xs / x0)` along univariate polynomials; `deg` must be at
    /// least the total degree.
    pub fn eval_homogenized(&self, x0: &UPoly<F>, xs: &[UPoly<F>], deg: u32) -> Result<UPoly<F>> {
        self.check_len(xs.len())?;
        let mut x0_pows = vec![UPoly::one()];
        for _ in 0..deg {
            x0_pows.push(&x0_pows[x0_pows.len() - 1] * x0);
        }
        let mut var_pows: Vec<Vec<UPoly<F>>> = xs.iter().map(|_| vec![UPoly::one()]).collect();
        let mut acc = UPoly::zero();
        for (e, c) in &self.terms {
            let d = e.degree();
            assert!(d <= deg, "homogenizing degree below total degree");
            let mut t = x0_pows[(deg - d) as usize].scale(c);
            for (i, &k) in e.0.iter().enumerate() {
                while var_pows[i].len() <= k as usize {
                    let next = &var_pows[i][var_pows[i].len() - 1] * &xs[i];
                    var_pows[i].push(next);
                }
                if k > 0 {
                    t = &t * &var_pows[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `Some(h)` with `self = h · d`, via grlex division by a single divisor.
    pub fn div_exact(&self, d: &Polynomial<F>) -> Option<Polynomial<F>> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((e, c)) = rem.leading() {
            let shift = e.checked_sub(&lm)?;
            let t = Polynomial::monomial(shift, c.clone() / lc.clone());
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Canonical text using the given variable names, highest term first.
    pub fn to_string_with(&self, names: &[&str]) -> String
    where
        F: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut coef = c.to_string();
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(j, &k)| {
                        if k == 1 {
                            names[j].to_string()
                        } else {
                            format!("{}^{}", names[j], k)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                s.push_str(&coef);
            } else if coef == "1" {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", coef, mono.join("*")));
            }
        }
        s
    }
}

impl<F: Field + fmt::Display> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.to_string_with(&refs))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, o: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, o: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, o: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, o.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut c = c1.clone();
                c *= c2;
                out.add_term(e1.add(e2), c);
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}
