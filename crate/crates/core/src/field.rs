//! Scalar fields used by the exact algorithms.
//!
//! Everything is generic over [`Field`]; [`Rational`] is the default and
//! [`QuadExt`] adjoins a square root when a construction needs one.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// An exact field of characteristic zero containing the rationals.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    /// The rational value, if this element lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    /// Scalar that turns `values` into a canonical representative of their
    /// projective class. The default makes the first nonzero entry one.
    fn normalizer(values: &[Self]) -> Self {
        match values.iter().find(|v| !v.is_zero()) {
            Some(v) => Self::one() / v.clone(),
            None => Self::one(),
        }
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    /// Clears denominators and common integer content, leaving the first
    /// nonzero entry positive.
    fn normalizer(values: &[Self]) -> Self {
        let nonzero = || values.iter().filter(|v| !v.is_zero());
        let den = nonzero().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let content = nonzero().fold(BigInt::zero(), |acc, v| {
            acc.gcd(&(v.numer() * (&den / v.denom())))
        });
        if content.is_zero() {
            return Rational::one();
        }
        let s = Rational::new(den, content);
        match nonzero().next() {
            Some(first) if first.is_negative() => -s,
            _ => s,
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q` or a decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int_part, frac)) = s.split_once('.') {
        let digits = format!("{int_part}{frac}");
        let num: BigInt = digits.parse().map_err(|_| format!("not a number: {s:?}"))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    s.parse::<Rational>()
        .map_err(|_| format!("not a rational: {s:?}"))
}

/// Exact square root of a rational when it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().magnitude().sqrt();
    let d = q.denom().magnitude().sqrt();
    let (n, d) = (BigInt::from(n), BigInt::from(d));
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// `a + b·√d` with `d` a fixed non-square rational.
///
/// Elements built by `zero()`/`one()` or [`Field::from_rational`] carry no
/// radicand; they adopt the radicand of whatever they are combined with.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: Option<Rational>,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(rational_sqrt(&d).is_none(), "radicand {d} is a square");
        QuadExt { a, b, d: Some(d) }
    }

    /// The element `√d`.
    pub fn sqrt_of(d: &Rational) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    fn radicand(x: &Option<Rational>, y: &Option<Rational>) -> Option<Rational> {
        match (x, y) {
            (Some(p), Some(q)) => {
                assert_eq!(p, q, "mixing quadratic extensions");
                Some(p.clone())
            }
            (Some(p), None) | (None, Some(p)) => Some(p.clone()),
            (None, None) => None,
        }
    }

    fn norm(&self) -> Rational {
        match &self.d {
            Some(d) => &self.a * &self.a - &self.b * &self.b * d,
            None => &self.a * &self.a,
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b
    }
}

impl Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.d, self.b.is_zero()) {
            (Some(d), false) => write!(f, "({} + {}*sqrt({}))", self.a, self.b, d),
            _ => write!(f, "{}", self.a),
        }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt {
            a: Rational::zero(),
            b: Rational::zero(),
            d: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt {
            a: Rational::one(),
            b: Rational::zero(),
            d: None,
        }
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += &o;
        self
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self -= &o;
        self
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(mut self, o: Self) -> Self {
        self *= &o;
        self
    }
}

impl Div for QuadExt {
    type Output = Self;
    fn div(mut self, o: Self) -> Self {
        self /= &o;
        self
    }
}

impl<'a> AddAssign<&'a QuadExt> for QuadExt {
    fn add_assign(&mut self, o: &'a QuadExt) {
        self.d = QuadExt::radicand(&self.d, &o.d);
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl<'a> SubAssign<&'a QuadExt> for QuadExt {
    fn sub_assign(&mut self, o: &'a QuadExt) {
        self.d = QuadExt::radicand(&self.d, &o.d);
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl<'a> MulAssign<&'a QuadExt> for QuadExt {
    fn mul_assign(&mut self, o: &'a QuadExt) {
        let d = QuadExt::radicand(&self.d, &o.d);
        let bb = &self.b * &o.b;
        let a = &self.a * &o.a + d.as_ref().map(|d| &bb * d).unwrap_or_else(Rational::zero);
        let b = &self.a * &o.b + &self.b * &o.a;
        *self = QuadExt { a, b, d };
    }
}

impl<'a> DivAssign<&'a QuadExt> for QuadExt {
    fn div_assign(&mut self, o: &'a QuadExt) {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in quadratic extension");
        let inv = QuadExt {
            a: &o.a / &n,
            b: -(&o.b / &n),
            d: o.d.clone(),
        };
        *self *= &inv;
    }
}

impl Field for QuadExt {
    fn from_rational(q: &Rational) -> Self {
        QuadExt {
            a: q.clone(),
            b: Rational::zero(),
            d: None,
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }
}
