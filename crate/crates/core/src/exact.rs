//! Exact rational scalars and certified rational enclosures of π and cosine values.
//!
//! Everything here is computed with arbitrary-precision rationals. Enclosures
//! come from alternating series whose first omitted term bounds the truncation
//! error, so the returned bounds are rigorous.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("malformed numeric literal {0:?}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(&'static str),
}

/// Shorthand for `num/den` with machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an optionally signed decimal literal such as `-0.50` or `12.` into an exact rational.
pub fn rational_from_decimal(text: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(text.to_string());
    let t = text.trim();
    let (negative, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Parses either a fraction `num/den` or a decimal literal.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let num = rational_from_decimal(n)?;
            let den = rational_from_decimal(d)?;
            if !num.is_integer() || !den.is_integer() || den.is_zero() {
                return Err(ExactError::Parse(text.to_string()));
            }
            Ok(num / den)
        }
        None => rational_from_decimal(t),
    }
}

/// Renders `q` as `num/den`, including a `/1` denominator for integers.
pub fn fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Lossy conversion for display and non-certified diagnostics only.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// A closed rational interval `[lo, hi]` certified to contain some real value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, ExactError> {
        if lo > hi {
            return Err(ExactError::Domain("enclosure lower bound exceeds upper bound"));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(v: Rational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Multiplies by a rational scalar, flipping the endpoints for negative factors.
    pub fn scale(&self, k: &Rational) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    /// Rounds `lo` down and `hi` up to the grid `1/den`. The result contains `self`.
    pub fn outward_round(&self, den: u64) -> Self {
        let den = BigInt::from(den);
        let lo = (&self.lo * &den).floor() / &den;
        let hi = (&self.hi * &den).ceil() / &den;
        Self { lo, hi }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

const MAX_COS_ARGUMENT: i64 = 4;

/// Certified enclosure of `cos(x)` of width at most `eps`.
///
/// Sums the Taylor series until the next term drops below `eps/2`, then widens the
/// partial sum by that term. For `|x| <= 4` the terms decrease monotonically from
/// the third onward, so the alternating-series bound applies.
pub fn cos_enclosure(x: &Rational, eps: &Rational) -> Result<Enclosure, ExactError> {
    if !eps.is_positive() {
        return Err(ExactError::Domain("cos_enclosure requires eps > 0"));
    }
    if x.abs() > int(MAX_COS_ARGUMENT) {
        return Err(ExactError::Domain("cos_enclosure requires |x| <= 4"));
    }
    let x2 = x * x;
    let half_eps = eps / int(2);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut k: i64 = 0;
    loop {
        // next term magnitude: x^(2k+2) / (2k+2)!
        let next = &term * &x2 / int((2 * k + 1) * (2 * k + 2));
        // monotone decrease from here on needs x^2 < (2k+3)(2k+4)
        let decreasing = x2 < int((2 * k + 3) * (2 * k + 4));
        if next < half_eps && decreasing {
            let sign_next_negative = k % 2 == 0;
            let other = if sign_next_negative { &sum - &next } else { &sum + &next };
            return Ok(if other < sum { Enclosure { lo: other, hi: sum } } else { Enclosure { lo: sum, hi: other } });
        }
        k += 1;
        if k % 2 == 1 {
            sum -= &next;
        } else {
            sum += &next;
        }
        term = next;
    }
}

/// Enclosure of `cos` over every point of `x`, assuming `x` lies inside `[0, π]`
/// where cosine is decreasing.
pub fn cos_enclosure_decreasing(x: &Enclosure, eps: &Rational) -> Result<Enclosure, ExactError> {
    if x.lo.is_negative() || x.hi > int(3) {
        return Err(ExactError::Domain("argument enclosure must lie in [0, 3]"));
    }
    let at_hi = cos_enclosure(&x.hi, eps)?;
    let at_lo = cos_enclosure(&x.lo, eps)?;
    Ok(Enclosure { lo: at_hi.lo, hi: at_lo.hi })
}

/// Enclosure of `arctan(1/m)` with width below `tol`, from the alternating series
/// `sum (-1)^k / ((2k+1) m^(2k+1))`.
fn atan_inverse_enclosure(m: u32, tol: &Rational) -> Enclosure {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = m.clone();
    let mut sum = Rational::zero();
    let mut k: u32 = 0;
    loop {
        let term = Rational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        if &term < tol {
            let other = if k.is_multiple_of(2) { &sum + &term } else { &sum - &term };
            return if other < sum { Enclosure { lo: other, hi: sum } } else { Enclosure { lo: sum, hi: other } };
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &m2;
        k += 1;
    }
}

/// Certified enclosure of π of width at most `eps`, via
/// `π = 16·arctan(1/5) − 4·arctan(1/239)`.
pub fn pi_enclosure(eps: &Rational) -> Result<Enclosure, ExactError> {
    if !eps.is_positive() {
        return Err(ExactError::Domain("pi_enclosure requires eps > 0"));
    }
    // never looser than 1/1000, which keeps the result inside (3, 22/7)
    let eps = eps.clone().min(ratio(1, 1000));
    let a = atan_inverse_enclosure(5, &(&eps / int(32)));
    let b = atan_inverse_enclosure(239, &(&eps / int(8)));
    let lo = int(16) * &a.lo - int(4) * &b.hi;
    let hi = int(16) * &a.hi - int(4) * &b.lo;
    Ok(Enclosure { lo, hi })
}

/// `true` when the rational is stored in canonical reduced form.
pub fn is_canonical(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals() {
        assert_eq!(rational_from_decimal("0.1229").unwrap(), ratio(1229, 10000));
        assert_eq!(rational_from_decimal("1").unwrap(), int(1));
        assert_eq!(rational_from_decimal("-0.50").unwrap(), ratio(-1, 2));
        assert_eq!(rational_from_decimal("+.5").unwrap(), ratio(1, 2));
        assert_eq!(rational_from_decimal("3.").unwrap(), int(3));
        for bad in ["", "-", ".", "1.2.3", "1e5", "0x10", "1/2", " - 1"] {
            assert!(rational_from_decimal(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn fractions_and_decimals_agree() {
        assert_eq!(parse_rational("65/100").unwrap(), parse_rational("0.65").unwrap());
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5/2").is_err());
        assert_eq!(fraction_string(&int(3)), "3/1");
        assert_eq!(fraction_string(&ratio(-2, 4)), "-1/2");
    }

    #[test]
    fn cos_of_zero_is_exact() {
        let e = cos_enclosure(&int(0), &ratio(1, 1000)).unwrap();
        assert_eq!(e, Enclosure::point(int(1)));
    }

    #[test]
    fn cos_domain_errors() {
        assert!(cos_enclosure(&int(1), &int(0)).is_err());
        assert!(cos_enclosure(&int(1), &int(-1)).is_err());
        assert!(cos_enclosure(&int(5), &ratio(1, 10)).is_err());
        assert!(pi_enclosure(&int(0)).is_err());
    }

    #[test]
    fn cos_of_0268() {
        let e = cos_enclosure(&ratio(268, 1000), &ratio(1, 1000)).unwrap();
        assert!(e.width() <= ratio(1, 1000));
        // cos(0.268) = 0.96430...
        assert!(e.contains(&ratio(96_430, 100_000)) || e.contains(&ratio(96_431, 100_000)));
        assert!(e.lo() > &ratio(963, 1000) && e.hi() < &ratio(966, 1000));
    }

    #[test]
    fn pi_classical_bounds() {
        for eps in [int(10), ratio(1, 2), ratio(1, 100), ratio(1, 1_000_000)] {
            let p = pi_enclosure(&eps).unwrap();
            assert!(p.lo() < p.hi());
            assert!(p.lo() > &int(3) && p.hi() < &ratio(22, 7));
            assert!(p.width() <= eps);
            assert!(p.contains(&ratio(314159265, 100000000)));
        }
        let p = pi_enclosure(&ratio(1, 100)).unwrap();
        assert!(p.lo() >= &ratio(314, 100) && p.hi() <= &ratio(315, 100));
    }

    #[test]
    fn outward_rounding_contains_original() {
        let e = Enclosure::new(ratio(96430, 100000), ratio(98079, 100000)).unwrap();
        let r = e.outward_round(1000);
        assert_eq!(r.lo(), &ratio(964, 1000));
        assert_eq!(r.hi(), &ratio(981, 1000));
        assert!(r.contains_enclosure(&e));
        let exact = Enclosure::new(ratio(1, 2), ratio(3, 4)).unwrap();
        assert_eq!(exact.outward_round(4), exact);
    }

    #[test]
    fn scaling_flips_for_negative_factor() {
        let e = Enclosure::new(int(1), int(2)).unwrap();
        assert_eq!(e.scale(&int(-1)), Enclosure::new(int(-2), int(-1)).unwrap());
        assert_eq!(e.scale(&ratio(1, 16)), Enclosure::new(ratio(1, 16), ratio(1, 8)).unwrap());
    }
}
