//! Cosine and sine polynomials and their conversion to algebraic polynomials in `Y = cos(x)`.
//!
//! `cos(kx) = T_k(cos x)` and `sin(kx) = sin(x) * U_(k-1)(cos x)`, so conversion is a
//! linear combination of Chebyshev polynomials. Scaling the argument only moves
//! coefficients to new indices; the converted result then uses `T_(k*m)` directly.

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::exact::{int, Rational};
use crate::poly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrigError {
    #[error("expected a pure cosine polynomial, found sine terms")]
    SineTermsPresent,
    #[error("expected a pure sine polynomial, found cosine terms")]
    CosineTermsPresent,
    #[error("argument scale must be a positive integer")]
    NonPositiveScale,
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
}

/// `sum a_k cos(k*var) + sum s_k sin(k*var)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigPoly {
    cos_coeffs: Vec<Rational>,
    // index k holds the coefficient of sin(k*var); index 0 is always zero
    sin_coeffs: Vec<Rational>,
    var: String,
}

fn strip(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl TrigPoly {
    pub fn new(mut cos_coeffs: Vec<Rational>, mut sin_coeffs: Vec<Rational>, var: impl Into<String>) -> Self {
        if let Some(s0) = sin_coeffs.first_mut() {
            *s0 = Rational::zero();
        }
        strip(&mut cos_coeffs);
        strip(&mut sin_coeffs);
        Self { cos_coeffs, sin_coeffs, var: var.into() }
    }

    pub fn cosine(cos_coeffs: Vec<Rational>, var: impl Into<String>) -> Self {
        Self::new(cos_coeffs, Vec::new(), var)
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(Vec::new(), Vec::new(), var)
    }

    pub fn constant(c: Rational, var: impl Into<String>) -> Self {
        Self::cosine(vec![c], var)
    }

    /// `c * cos(k*var)`.
    pub fn cos_term(c: Rational, k: usize, var: impl Into<String>) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::cosine(v, var)
    }

    /// `c * sin(k*var)`; `sin(0) = 0`.
    pub fn sin_term(c: Rational, k: usize, var: impl Into<String>) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(Vec::new(), v, var)
    }

    pub fn cos_coeffs(&self) -> &[Rational] {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &[Rational] {
        &self.sin_coeffs
    }

    pub fn cos_coeff(&self, k: usize) -> Rational {
        self.cos_coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.cos_coeffs.is_empty() && self.sin_coeffs.is_empty()
    }

    pub fn has_sine_terms(&self) -> bool {
        !self.sin_coeffs.is_empty()
    }

    pub fn has_cosine_terms(&self) -> bool {
        !self.cos_coeffs.is_empty()
    }

    /// Constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.cos_coeffs.len() <= 1 && self.sin_coeffs.is_empty()).then(|| self.cos_coeff(0))
    }

    fn compatible(&self, other: &Self) -> Result<String, TrigError> {
        if self.var == other.var || other.as_constant().is_some() {
            Ok(self.var.clone())
        } else if self.as_constant().is_some() {
            Ok(other.var.clone())
        } else {
            Err(TrigError::VariableMismatch(self.var.clone(), other.var.clone()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TrigError> {
        let var = self.compatible(other)?;
        let add = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            (0..a.len().max(b.len()))
                .map(|k| a.get(k).cloned().unwrap_or_default() + b.get(k).cloned().unwrap_or_default())
                .collect()
        };
        Ok(Self::new(add(&self.cos_coeffs, &other.cos_coeffs), add(&self.sin_coeffs, &other.sin_coeffs), var))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, TrigError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            self.cos_coeffs.iter().map(|a| a * c).collect(),
            self.sin_coeffs.iter().map(|a| a * c).collect(),
            self.var.clone(),
        )
    }

    /// Substitutes `var -> m * var`: the coefficient of `cos(k*var)` moves to index `k*m`.
    pub fn scale_argument(&self, m: usize) -> Result<Self, TrigError> {
        if m == 0 {
            return Err(TrigError::NonPositiveScale);
        }
        let spread = |v: &[Rational]| -> Vec<Rational> {
            if v.is_empty() {
                return Vec::new();
            }
            let mut out = vec![Rational::zero(); (v.len() - 1) * m + 1];
            for (k, c) in v.iter().enumerate() {
                out[k * m] = c.clone();
            }
            out
        };
        Ok(Self::new(spread(&self.cos_coeffs), spread(&self.sin_coeffs), self.var.clone()))
    }

    /// Ascending rendering such as `1-cos(y)+1/2*cos(2*y)`, parseable in trig mode.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut push = |c: &Rational, atom: Option<String>| {
            if c.is_zero() {
                return;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            match atom {
                None => out.push_str(&mag.to_string()),
                Some(a) if mag.is_one() => out.push_str(&a),
                Some(a) => out.push_str(&format!("{mag}*{a}")),
            }
        };
        let atom = |name: &str, k: usize, var: &str| {
            if k == 1 {
                format!("{name}({var})")
            } else {
                format!("{name}({k}*{var})")
            }
        };
        for (k, c) in self.cos_coeffs.iter().enumerate() {
            push(c, (k > 0).then(|| atom("cos", k, &self.var)));
        }
        for (k, c) in self.sin_coeffs.iter().enumerate().skip(1) {
            push(c, Some(atom("sin", k, &self.var)));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

const CHEBYSHEV_VAR: &str = "Y";

struct ChebyshevCache {
    first: RwLock<Vec<Arc<UniPoly>>>,
    second: RwLock<Vec<Arc<UniPoly>>>,
}

fn cache() -> &'static ChebyshevCache {
    static CACHE: OnceLock<ChebyshevCache> = OnceLock::new();
    CACHE.get_or_init(|| {
        let one = Arc::new(UniPoly::constant(Rational::one(), CHEBYSHEV_VAR));
        let y = UniPoly::identity(CHEBYSHEV_VAR);
        ChebyshevCache {
            first: RwLock::new(vec![one.clone(), Arc::new(y.clone())]),
            second: RwLock::new(vec![one, Arc::new(y.scale(&int(2)))]),
        }
    })
}

// Both kinds share the recurrence P_k = 2Y P_(k-1) - P_(k-2).
fn cached(table: &RwLock<Vec<Arc<UniPoly>>>, k: usize) -> Arc<UniPoly> {
    if let Some(p) = table.read().expect("chebyshev cache poisoned").get(k) {
        return p.clone();
    }
    let mut t = table.write().expect("chebyshev cache poisoned");
    while t.len() <= k {
        let n = t.len();
        let next = recurrence_step(&t[n - 1], &t[n - 2]);
        t.push(Arc::new(next));
    }
    t[k].clone()
}

fn recurrence_step(prev: &UniPoly, prev2: &UniPoly) -> UniPoly {
    let two = int(2);
    let mut coeffs = vec![Rational::zero(); prev.coeffs().len() + 1];
    for (i, c) in prev.coeffs().iter().enumerate() {
        coeffs[i + 1] = c * &two;
    }
    for (i, c) in prev2.coeffs().iter().enumerate() {
        coeffs[i] -= c;
    }
    UniPoly::new(coeffs, CHEBYSHEV_VAR)
}

/// Chebyshev polynomial of the first kind, `cos(kx) = T_k(cos x)`, in the variable `Y`.
pub fn chebyshev_t(k: usize) -> UniPoly {
    (*chebyshev_t_shared(k)).clone()
}

pub fn chebyshev_t_shared(k: usize) -> Arc<UniPoly> {
    cached(&cache().first, k)
}

/// Chebyshev polynomial of the second kind, `sin((k+1)x) = sin(x) U_k(cos x)`.
pub fn chebyshev_u(k: usize) -> UniPoly {
    (*cached(&cache().second, k)).clone()
}

fn combine(coeffs: &[Rational], basis: impl Fn(usize) -> Arc<UniPoly>, var: &str) -> UniPoly {
    let degree = coeffs.len();
    let mut acc = vec![Rational::zero(); degree];
    for (k, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (i, c) in basis(k).coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc[i] += a * c;
            }
        }
    }
    UniPoly::new(acc, var)
}

/// `sum a_k cos(kx) -> sum a_k T_k(Y)` in the monomial basis of `var`.
pub fn cos_to_alg(t: &TrigPoly, var: &str) -> Result<UniPoly, TrigError> {
    if t.has_sine_terms() {
        return Err(TrigError::SineTermsPresent);
    }
    Ok(combine(&t.cos_coeffs, chebyshev_t_shared, var))
}

/// The factor `Q` with `sum s_k sin(kx) = sin(x) Q(cos x)`.
pub fn sin_to_alg(t: &TrigPoly, var: &str) -> Result<UniPoly, TrigError> {
    if t.has_cosine_terms() {
        return Err(TrigError::CosineTermsPresent);
    }
    let shifted: Vec<Rational> = t.sin_coeffs.iter().skip(1).cloned().collect();
    Ok(combine(&shifted, |k| cached(&cache().second, k), var))
}

/// Inverse of [`cos_to_alg`]: re-expresses an algebraic polynomial in the Chebyshev basis.
pub fn alg_to_cos(p: &UniPoly, var: &str) -> TrigPoly {
    let mut rem: Vec<Rational> = p.coeffs().to_vec();
    let mut out = vec![Rational::zero(); rem.len()];
    for k in (0..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let tk = chebyshev_t_shared(k);
        let a = &rem[k] / tk.leading().expect("T_k is nonzero");
        for (i, c) in tk.coeffs().iter().enumerate() {
            rem[i] -= &a * c;
        }
        out[k] = a;
    }
    TrigPoly::cosine(out, var)
}
