//! Coefficient families and named polynomials of the Vietoris-type inequalities.
//!
//! `b_(2k) = b_(2k+1) = C(2k, k) / 4^k` are the Vietoris coefficients and
//! `d_(2k) = d_(2k+1) = (69/100)_k / k!` the comparison family. The Lemma 1
//! polynomials `eta`, `mu`, `nu` live in the variable `x` standing for `cos t`;
//! `eta` is `T_6` rewritten in that variable.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{int, ratio, Rational};
use crate::poly::UniPoly;
use crate::trig::TrigPoly;

/// Largest index served by the memoized coefficient tables and the `T_n`/`C_n` builders.
pub const MAX_INDEX: usize = 64;

/// Constant in the comparison bound `(820/33)(1 - cos(x/10))`.
pub fn bound_constant() -> Rational {
    ratio(820, 33)
}

/// Exact value of the decimal `0.1229` used in `nu`.
pub fn alpha_bound() -> Rational {
    ratio(1229, 10000)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    VietorisB,
    PochhammerD,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PaperError {
    #[error("index {0} outside the supported range 0..={MAX_INDEX}")]
    IndexOutOfRange(usize),
    #[error("domain error: {0}")]
    Domain(&'static str),
}

/// Memoized view of one coefficient family.
#[derive(Debug, Clone, Copy)]
pub struct CoeffFamily {
    kind: CoeffKind,
}

impl CoeffFamily {
    pub fn new(kind: CoeffKind) -> Self {
        Self { kind }
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn get(&self, k: usize) -> Rational {
        let table = match self.kind {
            CoeffKind::VietorisB => vietoris_table(),
            CoeffKind::PochhammerD => d_table(),
        };
        match table.get(k) {
            Some(v) => v.clone(),
            None => match self.kind {
                CoeffKind::VietorisB => vietoris_b_direct(k),
                CoeffKind::PochhammerD => d_coeff_direct(k),
            },
        }
    }
}

fn vietoris_table() -> &'static Vec<Rational> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=MAX_INDEX).map(vietoris_b_direct).collect())
}

fn d_table() -> &'static Vec<Rational> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=MAX_INDEX).map(d_coeff_direct).collect())
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn vietoris_b_direct(k: usize) -> Rational {
    let half = (k / 2) as u64;
    Rational::new(binomial(2 * half, half), BigInt::one() << (2 * half))
}

fn d_coeff_direct(k: usize) -> Rational {
    let half = k / 2;
    pochhammer(&ratio(69, 100), half) / Rational::from_integer(factorial(half as u64))
}

/// `b_k`: `b_(2j) = b_(2j+1) = C(2j, j) / 4^j`.
pub fn vietoris_b(k: usize) -> Rational {
    CoeffFamily::new(CoeffKind::VietorisB).get(k)
}

/// `b_n` through the factorial expression
/// `(2m-3)! / (2^(2m-3) (m-1)! (m-2)!)` with `m = floor(n/2) + 1`.
pub fn vietoris_b_factorial_form(n: usize) -> Result<Rational, PaperError> {
    if n < 2 {
        return Err(PaperError::Domain("factorial form is defined for n >= 2"));
    }
    let m = (n / 2 + 1) as u64;
    let num = factorial(2 * m - 3);
    let den = (BigInt::one() << (2 * m - 3)) * factorial(m - 1) * factorial(m - 2);
    Ok(Rational::new(num, den))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (a + int(k as i64)))
}

/// `d_k`: `d_(2j) = d_(2j+1) = (69/100)_j / j!`.
pub fn d_coeff(k: usize) -> Rational {
    CoeffFamily::new(CoeffKind::PochhammerD).get(k)
}

fn check_index(n: usize) -> Result<(), PaperError> {
    if n > MAX_INDEX {
        return Err(PaperError::IndexOutOfRange(n));
    }
    Ok(())
}

/// `T_n(x) = sum_(k=0..n) b_k cos(kx)`.
pub fn build_t_n(n: usize) -> Result<TrigPoly, PaperError> {
    check_index(n)?;
    Ok(TrigPoly::cosine((0..=n).map(vietoris_b).collect(), "x"))
}

/// `C_n(x) = sum_(k=0..n) (-1)^k b_k cos(kx)`.
pub fn build_c_n(n: usize) -> Result<TrigPoly, PaperError> {
    check_index(n)?;
    Ok(TrigPoly::cosine((0..=n).map(|k| alternate(k, vietoris_b(k))).collect(), "x"))
}

fn alternate(k: usize, v: Rational) -> Rational {
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `(820/33)(1 - cos(y))` as a cosine polynomial in `y`.
fn comparison_term(var: &str) -> TrigPoly {
    let c = bound_constant();
    TrigPoly::cosine(vec![c.clone(), -c], var)
}

/// `P_n(y) = C_n(10y) - (820/33)(1 - cos y)`, the Lemma 7 difference in `y = x/10`.
pub fn build_lemma7_difference(n: usize) -> Result<TrigPoly, PaperError> {
    let scaled = build_c_n(n)?.scale_argument(10).expect("scale 10 is positive").with_var("y");
    Ok(scaled.try_sub(&comparison_term("y")).expect("same variable"))
}

/// `Delta` in the variable `y = x/10`:
/// `sum_(k=0..21) (-1)^k (b_k - b_22) cos(10k y) - (820/33)(1 - cos y)`.
pub fn build_delta() -> TrigPoly {
    let b22 = vietoris_b(22);
    let mut coeffs = vec![Rational::zero(); 10 * 21 + 1];
    for k in 0..=21 {
        coeffs[10 * k] = alternate(k, vietoris_b(k) - &b22);
    }
    TrigPoly::cosine(coeffs, "y").try_sub(&comparison_term("y")).expect("same variable")
}

/// `I(x) = sum_(k=0..21) (b_k - (b_22/d_22) d_k) cos(kx)`.
pub fn build_i() -> TrigPoly {
    let ratio22 = vietoris_b(22) / d_coeff(22);
    TrigPoly::cosine((0..=21).map(|k| vietoris_b(k) - &ratio22 * d_coeff(k)).collect(), "x")
}

/// `eta(x) = 10x^6 + 6x^5 - 12x^4 - 11/2 x^3 + 29/8 x^2 + 11/8 x + 9/16`.
pub fn build_eta() -> UniPoly {
    UniPoly::new(vec![ratio(9, 16), ratio(11, 8), ratio(29, 8), ratio(-11, 2), int(-12), int(6), int(10)], "x")
}

/// `mu = eta * eta'' - (1/2) eta'^2`.
pub fn build_mu() -> UniPoly {
    let eta = build_eta();
    let d1 = eta.derivative();
    let d2 = d1.derivative();
    &(&eta * &d2) - &(&d1 * &d1).scale(&ratio(1, 2))
}

/// `nu = (1 - x^2)^3 mu^2 - 4 (1229/10000) x^2 eta^3`.
pub fn build_nu() -> UniPoly {
    let mu = build_mu();
    let eta = build_eta();
    let one_minus_x2 = UniPoly::from_integers(&[1, 0, -1], "x");
    let x2 = UniPoly::monomial(int(4) * alpha_bound(), 2, "x");
    &(&one_minus_x2.pow(3) * &mu.pow(2)) - &(&x2 * &eta.pow(3))
}
