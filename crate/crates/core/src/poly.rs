//! Dense univariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(&'static str),
}

/// A polynomial `sum c_k var^k` stored densely in ascending order.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients and reports `None` as its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: String,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>, var: impl Into<String>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs, var: var.into() }
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self { coeffs: Vec::new(), var: var.into() }
    }

    pub fn constant(c: Rational, var: impl Into<String>) -> Self {
        Self::new(vec![c], var)
    }

    /// `c * var^k`.
    pub fn monomial(c: Rational, k: usize, var: impl Into<String>) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    /// The polynomial `var` itself.
    pub fn identity(var: impl Into<String>) -> Self {
        Self::monomial(Rational::one(), 1, var)
    }

    pub fn from_integers(coeffs: &[i64], var: impl Into<String>) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect(), var)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn compatible(&self, other: &Self) -> Result<String, PolyError> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var.clone())
        } else if self.is_constant() {
            Ok(other.var.clone())
        } else {
            Err(PolyError::VariableMismatch(self.var.clone(), other.var.clone()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let var = self.compatible(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(coeffs, var))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let var = self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(coeffs, var))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect(), self.var.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(Rational::one(), self.var.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect();
        Self::new(coeffs, self.var.clone())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Sign of the value at `t`, avoiding rational normalization during Horner's scheme.
    pub fn sign_at(&self, t: &Rational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        // p(n/d) * d^deg * L, where L clears all coefficient denominators (L > 0)
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let (n, d) = (t.numer(), t.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            let scaled = c.numer() * (&lcm / c.denom());
            acc = acc * n + scaled * &dpow;
            dpow *= d;
        }
        acc.sign_ordering()
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let var = self.compatible(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(var.clone()), Self::new(rem, var)));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot, var.clone()), Self::new(rem, var)))
    }

    /// Divides by `|leading coefficient|`, leaving a leading coefficient of `±1`.
    pub fn normalize_leading(&self) -> Result<Self, PolyError> {
        let lead = self.leading().ok_or(PolyError::Domain("cannot normalize the zero polynomial"))?;
        Ok(self.scale(&lead.abs().recip()))
    }

    /// Splits `self = content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(Rational, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::Domain("zero polynomial has no primitive part"));
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let primitive = ints.iter().map(|c| Rational::from_integer(c / &g)).collect();
        Ok((Rational::new(g, lcm), Self::new(primitive, self.var.clone())))
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.numer().clone())).collect()
    }

    pub fn from_big_integers(coeffs: Vec<BigInt>, var: impl Into<String>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect(), var)
    }

    /// Descending-degree rendering such as `262144*Y^20-150*Y^2+820/33*Y-1475/66`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            let power = match k {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, k),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect(), var: self.var.clone() }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

// Operator forms panic on mismatched variables; use the `try_*` methods for user input.
macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$try(rhs).expect("polynomial variables must agree")
            }
        }
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$try(&rhs).expect("polynomial variables must agree")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

/// Pseudo-remainder of `a` by `b` over the integers.
///
/// Returns `(r, negative)` where `m * a = q * b + r` for some quotient `q` and a
/// nonzero integer multiplier `m` whose sign is negative iff `negative` is set.
/// Each elimination step cancels the common factor of the leading coefficients
/// to limit growth.
pub(crate) fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, bool) {
    let lb = b.last().expect("divisor must be nonzero").clone();
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut negative = false;
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let g = lr.gcd(&lb);
        let mul_r = &lb / &g;
        let mul_b = &lr / &g;
        if mul_r.is_negative() {
            negative = !negative;
        }
        if !mul_r.is_one() {
            for c in r.iter_mut() {
                *c *= &mul_r;
            }
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &mul_b * bj;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
        trim(&mut r);
    }
    (r, negative)
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides out the gcd of the coefficients (made positive).
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in v.iter() {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.abs() } else { g.gcd(c) };
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
}

/// Sign of an integer polynomial at `t` via the homogenized Horner scheme.
pub(crate) fn integer_sign_at(coeffs: &[BigInt], t: &Rational) -> Ordering {
    let (n, d) = (t.numer(), t.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in coeffs.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    acc.sign_ordering()
}
