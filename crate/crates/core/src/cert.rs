//! Certificates for the four Sturm-based claims and their JSON form.
//!
//! Each certificate carries the exact polynomial, the rational interval, the sign
//! variations at both endpoints and a sample sign, so a third party can recheck
//! it with any exact Sturm implementation ([`recheck`] does exactly that).

use std::cmp::Ordering;
use std::io;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{
    cos_enclosure, cos_enclosure_decreasing, fraction_string, parse_rational, pi_enclosure, ratio, Enclosure,
    ExactError, Rational,
};
use crate::paperlib;
use crate::poly::UniPoly;
use crate::sturm::{
    certify_positive_with_chain, EndpointAdjustment, Interval, Normalization, SturmChain, SturmError, Verdict,
};
use crate::trig::cos_to_alg;

#[derive(Debug, thiserror::Error)]
pub enum CertError {
    #[error(transparent)]
    Sturm(#[from] SturmError),
    #[error("enclosure construction failed: {0}")]
    Enclosure(#[from] ExactError),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// One verified (or failed) claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub claim_id: String,
    pub polynomial: UniPoly,
    pub interval: Interval,
    pub variations_at_lo: usize,
    pub variations_at_hi: usize,
    pub root_count: usize,
    pub sample_point: Rational,
    pub sample_sign: Ordering,
    pub endpoint_signs: (Ordering, Ordering),
    pub endpoint_adjustments: Vec<EndpointAdjustment>,
    pub verdict: Verdict,
    pub note: String,
}

/// Non-certified numeric estimate, reported next to the certificates but never mixed with them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizerRecord {
    pub label: String,
    pub bracket: [f64; 2],
    pub minimizer: f64,
    pub minimum: f64,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleJson {
    pub point: String,
    pub sign: String,
}

/// Wire form of a [`Certificate`]. Rationals are `num/den` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub claim_id: String,
    pub poly: PolyJson,
    pub interval: IntervalJson,
    pub variations: [usize; 2],
    pub root_count: usize,
    pub sample: SampleJson,
    pub endpoint_signs: [String; 2],
    pub endpoint_adjustments: Vec<EndpointAdjustment>,
    pub verdict: Verdict,
    pub note: String,
}

pub fn sign_symbol(s: Ordering) -> &'static str {
    match s {
        Ordering::Greater => "+",
        Ordering::Less => "-",
        Ordering::Equal => "0",
    }
}

impl Certificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            claim_id: self.claim_id.clone(),
            poly: PolyJson {
                var: self.polynomial.var().to_string(),
                coeffs: self.polynomial.coeffs().iter().map(fraction_string).collect(),
            },
            interval: IntervalJson { lo: fraction_string(self.interval.lo()), hi: fraction_string(self.interval.hi()) },
            variations: [self.variations_at_lo, self.variations_at_hi],
            root_count: self.root_count,
            sample: SampleJson {
                point: fraction_string(&self.sample_point),
                sign: sign_symbol(self.sample_sign).to_string(),
            },
            endpoint_signs: [
                sign_symbol(self.endpoint_signs.0).to_string(),
                sign_symbol(self.endpoint_signs.1).to_string(),
            ],
            endpoint_adjustments: self.endpoint_adjustments.clone(),
            verdict: self.verdict,
            note: self.note.clone(),
        }
    }

    /// One summary line: id, verdict, root count and interval.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<14} {:<13} roots={} variations={}/{} on [{}, {}]",
            self.claim_id,
            self.verdict.to_string(),
            self.root_count,
            self.variations_at_lo,
            self.variations_at_hi,
            self.interval.lo(),
            self.interval.hi()
        )
    }
}

impl CertificateJson {
    pub fn polynomial(&self) -> Result<UniPoly, CertError> {
        let coeffs = self
            .poly
            .coeffs
            .iter()
            .map(|c| parse_rational(c).map_err(|e| CertError::Malformed(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(coeffs, self.poly.var.clone()))
    }

    pub fn interval(&self) -> Result<Interval, CertError> {
        let parse = |s: &str| parse_rational(s).map_err(|e| CertError::Malformed(e.to_string()));
        Ok(Interval::new(parse(&self.interval.lo)?, parse(&self.interval.hi)?)?)
    }
}

/// Recomputes a serialized certificate from scratch and reports whether every
/// recorded quantity (variations, count, signs, verdict) is reproduced.
pub fn recheck(cert: &CertificateJson) -> Result<bool, CertError> {
    let p = cert.polynomial()?;
    let iv = cert.interval()?;
    let sample = parse_rational(&cert.sample.point).map_err(|e| CertError::Malformed(e.to_string()))?;
    let chain = SturmChain::build(&p, Normalization::Primitive)?;
    let rebuilt = claim_from_chain(&cert.claim_id, &p, &chain, &iv, &sample, cert.verdict == Verdict::ZeroFree, "")?;
    let fresh = rebuilt.to_json();
    Ok(fresh.variations == cert.variations
        && fresh.root_count == cert.root_count
        && fresh.sample.sign == cert.sample.sign
        && fresh.endpoint_signs == cert.endpoint_signs
        && fresh.verdict == cert.verdict)
}

fn claim_from_chain(
    claim_id: &str,
    p: &UniPoly,
    chain: &SturmChain,
    iv: &Interval,
    sample: &Rational,
    zero_free_claim: bool,
    note: &str,
) -> Result<Certificate, CertError> {
    let report = certify_positive_with_chain(chain, iv, sample)?;
    let verdict = if zero_free_claim {
        // count over (lo, hi] plus a nonzero value at lo rules out zeros on [lo, hi]
        if report.roots.count() == 0 && report.lo_sign != Ordering::Equal {
            Verdict::ZeroFree
        } else {
            Verdict::NotCertified
        }
    } else {
        report.verdict
    };
    let note = match (&report.failed, zero_free_claim) {
        (Some(failed), false) => format!("{note}; failed check: {failed}"),
        _ => note.to_string(),
    };
    Ok(Certificate {
        claim_id: claim_id.to_string(),
        polynomial: p.clone(),
        interval: iv.clone(),
        variations_at_lo: report.roots.variations_at_lo(),
        variations_at_hi: report.roots.variations_at_hi(),
        root_count: report.roots.count(),
        sample_point: report.sample,
        sample_sign: report.sample_sign,
        endpoint_signs: (report.lo_sign, report.hi_sign),
        endpoint_adjustments: report.roots.adjustments().to_vec(),
        verdict,
        note,
    })
}

fn positivity_claim(
    claim_id: &str,
    p: &UniPoly,
    iv: &Interval,
    sample: &Rational,
    note: &str,
) -> Result<Certificate, CertError> {
    let chain = SturmChain::build(p, Normalization::Primitive)?;
    claim_from_chain(claim_id, p, &chain, iv, sample, false, note)
}

fn lemma1_interval() -> Interval {
    Interval::new(ratio(65, 100), ratio(95, 100)).expect("65/100 < 95/100")
}

/// Zero-freeness of `mu` and `nu` on `[65/100, 95/100]`, plus the non-certified
/// numeric estimate of `min T_6(t)/(t - π)^2`.
pub fn run_lemma1() -> Result<(Vec<Certificate>, MinimizerRecord), CertError> {
    let iv = lemma1_interval();
    let sample = iv.midpoint();
    let mut certs = Vec::new();
    for (id, p, name) in [
        ("lemma01-mu", paperlib::build_mu(), "mu = eta*eta'' - eta'^2/2"),
        ("lemma01-nu", paperlib::build_nu(), "nu = (1-x^2)^3*mu^2 - 4*(1229/10000)*x^2*eta^3"),
    ] {
        let chain = SturmChain::build(&p, Normalization::LeadingUnit)?;
        let note = format!("Lemma 1: {name} has no zero on [65/100, 95/100]; chain with leading coefficients +-1");
        certs.push(claim_from_chain(id, &p, &chain, &iv, &sample, true, &note)?);
    }
    Ok((certs, lemma1_minimizer()))
}

fn t6_over_square(t: f64) -> f64 {
    let value: f64 = (0..=6).map(|k| crate::exact::to_f64(&paperlib::vietoris_b(k)) * (k as f64 * t).cos()).sum();
    value / (t - std::f64::consts::PI).powi(2)
}

/// Grid scan of `[0, π)` followed by golden-section refinement, in `f64`.
pub fn lemma1_minimizer() -> MinimizerRecord {
    const GRID: usize = 20_000;
    let pi = std::f64::consts::PI;
    let step = pi / GRID as f64;
    let best = (0..GRID)
        .map(|i| i as f64 * step)
        .min_by(|a, b| t6_over_square(*a).total_cmp(&t6_over_square(*b)))
        .expect("nonempty grid");
    let (mut a, mut b) = ((best - step).max(0.0), (best + step).min(pi - step));
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-12 {
        let c = b - inv_phi * (b - a);
        let d = a + inv_phi * (b - a);
        if t6_over_square(c) < t6_over_square(d) {
            b = d;
        } else {
            a = c;
        }
    }
    let minimizer = (a + b) / 2.0;
    MinimizerRecord {
        label: "NON-CERTIFIED".to_string(),
        bracket: [a, b],
        minimizer,
        minimum: t6_over_square(minimizer),
        note: "Lemma 1: floating-point golden-section estimate of min T_6(t)/(t-pi)^2 on [0, pi); informational only"
            .to_string(),
    }
}

fn lemma7_interval() -> Interval {
    Interval::new(ratio(951, 1000), ratio(981, 1000)).expect("951/1000 < 981/1000")
}

/// `P_n^*(Y)`: the Lemma 7 difference for index `n` as a polynomial in `Y = cos(x/10)`.
pub fn lemma7_polynomial(n: usize) -> UniPoly {
    let p = paperlib::build_lemma7_difference(n).expect("n within the supported range");
    cos_to_alg(&p, "Y").expect("pure cosine polynomial")
}

fn lemma7_case(n: usize) -> Result<Certificate, CertError> {
    let note = format!("Lemma 7, n={n}: C_n(10y) - (820/33)(1 - cos y) > 0 for Y = cos(y) in [951/1000, 981/1000]");
    positivity_claim(&format!("lemma07-n{n:02}"), &lemma7_polynomial(n), &lemma7_interval(), &ratio(97, 100), &note)
}

/// The sweep `n = 2..=21`; `n = 6` is expected to fail.
pub fn run_lemma7() -> Result<Vec<Certificate>, CertError> {
    (2..=21).into_par_iter().map(lemma7_case).collect()
}

/// Abscissa bound of a Lemma 8 row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XBound {
    FivePiOverEight,
    Exact(Rational),
}

impl XBound {
    fn label(&self) -> String {
        match self {
            XBound::FivePiOverEight => "5*pi/8".to_string(),
            XBound::Exact(q) => q.to_string(),
        }
    }

    /// Certified enclosure of `x / 10`.
    fn tenth(&self) -> Result<Enclosure, ExactError> {
        Ok(match self {
            XBound::FivePiOverEight => pi_enclosure(&ratio(1, 1_000_000_000_000_000))?.scale(&ratio(1, 16)),
            XBound::Exact(q) => Enclosure::point(q / crate::exact::int(10)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma8Row {
    pub bound: Rational,
    pub x_lo: XBound,
    pub x_hi: XBound,
}

/// Decimal grids tried, coarsest first, when rounding `Y`-interval endpoints outward.
pub const LEMMA8_GRIDS: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];
const LEMMA8_ENCLOSURE_EPS: (i64, i64) = (1, 1_000_000_000_000);

pub fn lemma8_rows() -> Vec<Lemma8Row> {
    let x = |n: i64, d: i64| XBound::Exact(ratio(n, d));
    let row = |bound: Rational, x_lo: XBound, x_hi: XBound| Lemma8Row { bound, x_lo, x_hi };
    vec![
        row(ratio(29, 100), XBound::FivePiOverEight, x(268, 100)),
        row(ratio(46, 100), x(268, 100), x(283, 100)),
        row(ratio(64, 100), x(283, 100), x(2908, 1000)),
        row(ratio(90, 100), x(2908, 1000), x(2970, 1000)),
        row(ratio(132, 100), x(2970, 1000), x(3021, 1000)),
        row(ratio(178, 100), x(3021, 1000), x(3051, 1000)),
    ]
}

impl Lemma8Row {
    /// Enclosure of `[cos(x_hi/10), cos(x_lo/10)]` before rounding.
    pub fn y_enclosure(&self, eps: &Rational) -> Result<Enclosure, ExactError> {
        let lower = cos_enclosure_decreasing(&self.x_hi.tenth()?, eps)?;
        let upper = cos_enclosure_decreasing(&self.x_lo.tenth()?, eps)?;
        Enclosure::new(lower.lo().clone(), upper.hi().clone())
    }

    /// The rational `Y`-interval, outward-rounded to the grid `1/grid`.
    pub fn y_interval(&self, grid: u64) -> Result<Interval, CertError> {
        let eps = ratio(LEMMA8_ENCLOSURE_EPS.0, LEMMA8_ENCLOSURE_EPS.1);
        let rounded = self.y_enclosure(&eps)?.outward_round(grid);
        Ok(Interval::new(rounded.lo().clone(), rounded.hi().clone())?)
    }
}

/// `Delta(Y) - c` for the Lemma 8 bound `c`, with `Y = cos(x/10)`.
pub fn lemma8_polynomial(bound: &Rational) -> UniPoly {
    let delta = cos_to_alg(&paperlib::build_delta(), "Y").expect("pure cosine polynomial");
    &delta - &UniPoly::constant(bound.clone(), "Y")
}

fn lemma8_case(index: usize, row: &Lemma8Row, delta: &UniPoly) -> Result<Certificate, CertError> {
    let p = delta - &UniPoly::constant(row.bound.clone(), "Y");
    let chain = SturmChain::build(&p, Normalization::Primitive)?;
    let mut last = None;
    // rounding to a coarse grid can pull in abscissae where the bound fails,
    // so fall back to finer grids; the chain does not depend on the interval
    for grid in LEMMA8_GRIDS {
        let iv = row.y_interval(grid)?;
        let note = format!(
            "Lemma 8 row {}: Delta(x) > {} for {} <= x <= {}; Y = cos(x/10) enclosed with width <= 10^-12 and rounded outward to the 1/{} grid",
            index + 1,
            row.bound,
            row.x_lo.label(),
            row.x_hi.label(),
            grid
        );
        let cert =
            claim_from_chain(&format!("lemma08-row{}", index + 1), &p, &chain, &iv, &iv.midpoint(), false, &note)?;
        if cert.verdict == Verdict::Positive {
            return Ok(cert);
        }
        last = Some(cert);
    }
    Ok(last.expect("at least one grid"))
}

/// The six lower bounds for `Delta`.
pub fn run_lemma8() -> Result<Vec<Certificate>, CertError> {
    let delta = cos_to_alg(&paperlib::build_delta(), "Y").expect("pure cosine polynomial");
    let rows = lemma8_rows();
    rows.par_iter().enumerate().map(|(i, row)| lemma8_case(i, row, &delta)).collect()
}

/// `I(Y) - 3/2` with `Y = cos x`.
pub fn lemma11_polynomial() -> UniPoly {
    let i = cos_to_alg(&paperlib::build_i(), "Y").expect("pure cosine polynomial");
    &i - &UniPoly::constant(ratio(3, 2), "Y")
}

/// `I(x) > 3/2` for `0 < x <= 1/10`, via `Y = cos x` in `[995/1000, 1]`.
pub fn run_lemma11() -> Result<Certificate, CertError> {
    let iv = Interval::new(ratio(995, 1000), ratio(1, 1))?;
    positivity_claim(
        "lemma11",
        &lemma11_polynomial(),
        &iv,
        &ratio(999, 1000),
        "Lemma 11: I(x) - 3/2 > 0 for Y = cos(x) in [995/1000, 1], covering 0 <= x <= 1/10",
    )
}

/// Check that `cos(1/10)` indeed lies above the `995/1000` endpoint used by [`run_lemma11`].
pub fn lemma11_covers_range() -> Result<bool, ExactError> {
    let c = cos_enclosure(&ratio(1, 10), &ratio(1, 1_000_000))?;
    Ok(c.lo() >= &ratio(995, 1000))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    Lemma1,
    Lemma7,
    Lemma8,
    Lemma11,
    All,
}

#[derive(Debug, Clone)]
pub struct SuiteOutput {
    pub certificates: Vec<Certificate>,
    pub informational: Vec<MinimizerRecord>,
}

impl SuiteOutput {
    /// Certificates that failed although they were expected to pass.
    /// Only Lemma 7 with `n = 6` is expected to fail.
    pub fn unexpected_failures(&self) -> Vec<&Certificate> {
        self.certificates.iter().filter(|c| c.verdict == Verdict::NotCertified && c.claim_id != "lemma07-n06").collect()
    }
}

pub fn run_suite(selector: Selector) -> Result<SuiteOutput, CertError> {
    let mut certificates = Vec::new();
    let mut informational = Vec::new();
    let want = |s: Selector| selector == s || selector == Selector::All;
    if want(Selector::Lemma1) {
        let (certs, minimizer) = run_lemma1()?;
        certificates.extend(certs);
        informational.push(minimizer);
    }
    if want(Selector::Lemma7) {
        certificates.extend(run_lemma7()?);
    }
    if want(Selector::Lemma8) {
        certificates.extend(run_lemma8()?);
    }
    if want(Selector::Lemma11) {
        certificates.push(run_lemma11()?);
    }
    certificates.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(SuiteOutput { certificates, informational })
}

/// Pretty JSON array of certificates, ordered by `claim_id`.
pub fn certificates_to_json(certs: &[Certificate]) -> Result<String, CertError> {
    let mut wire: Vec<CertificateJson> = certs.iter().map(Certificate::to_json).collect();
    wire.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    let mut text = serde_json::to_string_pretty(&wire)?;
    text.push('\n');
    Ok(text)
}

pub fn emit_certificates(certs: &[Certificate], destination: &Path) -> Result<(), CertError> {
    std::fs::write(destination, certificates_to_json(certs)?)?;
    Ok(())
}

pub fn parse_certificates(text: &str) -> Result<Vec<CertificateJson>, CertError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn empty_list_serializes_to_empty_array() {
        assert_eq!(certificates_to_json(&[]).unwrap().trim(), "[]");
    }

    #[test]
    fn lemma11_interval_covers_cos_of_a_tenth() {
        assert!(lemma11_covers_range().unwrap());
    }

    #[test]
    fn rows_have_ordered_bounds() {
        let rows = lemma8_rows();
        assert_eq!(rows.len(), 6);
        for w in rows.windows(2) {
            assert!(w[0].bound < w[1].bound);
            assert_eq!(w[0].x_hi, w[1].x_lo);
        }
        assert_eq!(rows[0].y_interval(1000).unwrap(), Interval::new(ratio(964, 1000), ratio(981, 1000)).unwrap());
    }

    #[test]
    fn small_certificate_round_trip() {
        let p = UniPoly::from_integers(&[1, 0, 1], "Y");
        let iv = Interval::new(int(-1), int(2)).unwrap();
        let c = positivity_claim("demo", &p, &iv, &int(0), "y^2+1").unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        let json = certificates_to_json(std::slice::from_ref(&c)).unwrap();
        let back = parse_certificates(&json).unwrap();
        assert_eq!(back, vec![c.to_json()]);
        assert!(back[0].polynomial().unwrap() == p);
        assert!(recheck(&back[0]).unwrap());
        let mut forged = back[0].clone();
        forged.root_count = 1;
        assert!(!recheck(&forged).unwrap());
    }
}
