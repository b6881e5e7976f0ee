//! Sturm chains, sign variations and certified real-root counting.
//!
//! A chain starts with `X0 = p`, `X1 = p'` and continues with the negated
//! Euclidean remainders `Xi = -rem(X(i-2), X(i-1))`, each scaled by a positive
//! constant. The drop in sign variations between two points counts the distinct
//! real roots in the half-open interval between them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact::{int, Rational};
use crate::poly::{integer_sign_at, make_primitive, pseudo_remainder, PolyError, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SturmError {
    #[error("{0} endpoint {1} is a root of the polynomial")]
    EndpointRoot(Endpoint, Rational),
    #[error("invalid interval: lower bound {0} is not below upper bound {1}")]
    EmptyInterval(Rational, Rational),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Lo,
    Hi,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endpoint::Lo => "lower",
            Endpoint::Hi => "upper",
        })
    }
}

/// How chain members are rescaled after each remainder step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Leading coefficient `±1` for every member after the first.
    #[default]
    LeadingUnit,
    /// Integer coefficients with unit content; much cheaper for high degrees.
    Primitive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, SturmError> {
        if lo >= hi {
            return Err(SturmError::EmptyInterval(lo, hi));
        }
        Ok(Self { lo, hi })
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

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// What to do when an interval endpoint is itself a root.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum EndpointPolicy {
    #[default]
    Strict,
    /// Move the offending endpoint by `margin`, halved until it is no longer a
    /// root and no further root lies between the old and new endpoint. The lower
    /// endpoint moves inward and the upper one outward, so the count over
    /// `(lo, hi]` is unchanged.
    Shrink { margin: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EndpointAdjustment {
    pub endpoint: Endpoint,
    pub original: String,
    pub adjusted: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    count: usize,
    variations_at_lo: usize,
    variations_at_hi: usize,
    adjustments: Vec<EndpointAdjustment>,
}

impl RootCount {
    fn new(variations_at_lo: usize, variations_at_hi: usize, adjustments: Vec<EndpointAdjustment>) -> Self {
        assert!(
            variations_at_lo >= variations_at_hi,
            "sign variations increased across the interval ({variations_at_lo} -> {variations_at_hi})"
        );
        Self { count: variations_at_lo - variations_at_hi, variations_at_lo, variations_at_hi, adjustments }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn variations_at_lo(&self) -> usize {
        self.variations_at_lo
    }

    pub fn variations_at_hi(&self) -> usize {
        self.variations_at_hi
    }

    pub fn adjustments(&self) -> &[EndpointAdjustment] {
        &self.adjustments
    }
}

/// A Sturm chain `X0, X1, ..., Xm`; the last member is nonzero.
#[derive(Debug, Clone)]
pub struct SturmChain {
    members: Vec<UniPoly>,
    // integer images of the members, used for fast sign evaluation
    integer_members: Option<Vec<Vec<BigInt>>>,
    normalization: Normalization,
}

impl SturmChain {
    pub fn build(p: &UniPoly, normalization: Normalization) -> Result<Self, SturmError> {
        match p.degree() {
            None => return Err(SturmError::Domain("cannot build a Sturm chain of the zero polynomial")),
            Some(0) => return Err(SturmError::Domain("cannot build a Sturm chain of a constant")),
            Some(_) => {}
        }
        match normalization {
            Normalization::LeadingUnit => Self::build_leading_unit(p),
            Normalization::Primitive => Ok(Self::build_primitive(p)),
        }
    }

    fn build_leading_unit(p: &UniPoly) -> Result<Self, SturmError> {
        let mut members = vec![p.clone(), p.derivative().normalize_leading()?];
        loop {
            let n = members.len();
            let (_, rem) = members[n - 2].divrem(&members[n - 1])?;
            if rem.is_zero() {
                break;
            }
            members.push((-rem).normalize_leading()?);
        }
        Ok(Self { members, integer_members: None, normalization: Normalization::LeadingUnit })
    }

    fn build_primitive(p: &UniPoly) -> Self {
        let (content, prim) = p.content_primitive().expect("nonzero input");
        // keep X0 a positive multiple of p
        let mut x0 = prim.integer_coeffs().expect("primitive part is integral");
        if content.is_negative() {
            x0.iter_mut().for_each(|c| *c = -&*c);
        }
        let mut x1: Vec<BigInt> = x0.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
        make_primitive(&mut x1);
        let mut ints = vec![x0, x1];
        loop {
            let n = ints.len();
            let (mut rem, multiplier_negative) = pseudo_remainder(&ints[n - 2], &ints[n - 1]);
            if rem.is_empty() {
                break;
            }
            // negate the true remainder: flip unless the multiplier was already negative
            if !multiplier_negative {
                rem.iter_mut().for_each(|c| *c = -&*c);
            }
            make_primitive(&mut rem);
            ints.push(rem);
        }
        let var = p.var().to_string();
        let members = ints.iter().map(|v| UniPoly::from_big_integers(v.clone(), var.clone())).collect();
        Self { members, integer_members: Some(ints), normalization: Normalization::Primitive }
    }

    pub fn members(&self) -> &[UniPoly] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn polynomial(&self) -> &UniPoly {
        &self.members[0]
    }

    /// Signs of every member at `t`, zeros included.
    pub fn signs_at(&self, t: &Rational) -> Vec<Ordering> {
        match &self.integer_members {
            Some(ints) => ints.iter().map(|m| integer_sign_at(m, t)).collect(),
            None => self.members.iter().map(|m| m.sign_at(t)).collect(),
        }
    }

    /// Sign changes in the member values at `t` after discarding zeros.
    pub fn sign_variations(&self, t: &Rational) -> usize {
        count_variations(&self.signs_at(t))
    }

    fn leading_sign_at(&self, t: &Rational) -> Ordering {
        match &self.integer_members {
            Some(ints) => integer_sign_at(&ints[0], t),
            None => self.members[0].sign_at(t),
        }
    }

    /// Distinct roots of `X0` in `(lo, hi]`.
    pub fn count_roots(&self, iv: &Interval, policy: &EndpointPolicy) -> Result<RootCount, SturmError> {
        let mut lo = iv.lo.clone();
        let mut hi = iv.hi.clone();
        let mut adjustments = Vec::new();
        for endpoint in [Endpoint::Lo, Endpoint::Hi] {
            let at = match endpoint {
                Endpoint::Lo => &lo,
                Endpoint::Hi => &hi,
            };
            if self.leading_sign_at(at) != Ordering::Equal {
                continue;
            }
            let EndpointPolicy::Shrink { margin } = policy else {
                return Err(SturmError::EndpointRoot(endpoint, at.clone()));
            };
            let moved = self.nudge(endpoint, &lo, &hi, margin)?;
            adjustments.push(EndpointAdjustment {
                endpoint,
                original: crate::exact::fraction_string(at),
                adjusted: crate::exact::fraction_string(&moved),
            });
            match endpoint {
                Endpoint::Lo => lo = moved,
                Endpoint::Hi => hi = moved,
            }
        }
        Ok(RootCount::new(self.sign_variations(&lo), self.sign_variations(&hi), adjustments))
    }

    fn nudge(
        &self,
        endpoint: Endpoint,
        lo: &Rational,
        hi: &Rational,
        margin: &Rational,
    ) -> Result<Rational, SturmError> {
        if !margin.is_positive() {
            return Err(SturmError::Domain("shrink margin must be positive"));
        }
        let mut delta = margin.clone();
        if endpoint == Endpoint::Lo {
            while delta >= hi - lo {
                delta /= int(2);
            }
        }
        // both endpoints move right: lo inward, hi outward
        let origin = match endpoint {
            Endpoint::Lo => lo,
            Endpoint::Hi => hi,
        };
        let v_origin = self.sign_variations(origin);
        loop {
            let candidate = origin + &delta;
            if self.leading_sign_at(&candidate) != Ordering::Equal && self.sign_variations(&candidate) == v_origin {
                return Ok(candidate);
            }
            delta /= int(2);
        }
    }
}

/// Adjacent strict sign changes after dropping zeros.
pub fn count_variations(signs: &[Ordering]) -> usize {
    let nonzero: Vec<_> = signs.iter().filter(|s| **s != Ordering::Equal).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn build_chain(p: &UniPoly, normalization: Normalization) -> Result<SturmChain, SturmError> {
    SturmChain::build(p, normalization)
}

pub fn sign_variations(chain: &SturmChain, t: &Rational) -> usize {
    chain.sign_variations(t)
}

/// Counts distinct real roots of `p` in `(iv.lo, iv.hi]`.
pub fn count_roots(p: &UniPoly, iv: &Interval, policy: &EndpointPolicy) -> Result<RootCount, SturmError> {
    if p.is_zero() {
        return Err(SturmError::Domain("the zero polynomial vanishes everywhere"));
    }
    if p.is_constant() {
        // no roots; still honour the endpoint checks trivially
        return Ok(RootCount::new(0, 0, Vec::new()));
    }
    SturmChain::build(p, Normalization::Primitive)?.count_roots(iv, policy)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Verdict {
    #[serde(rename = "POSITIVE")]
    Positive,
    #[serde(rename = "ZERO-FREE")]
    ZeroFree,
    #[serde(rename = "NOT-CERTIFIED")]
    NotCertified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Positive => "POSITIVE",
            Verdict::ZeroFree => "ZERO-FREE",
            Verdict::NotCertified => "NOT-CERTIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailedCheck {
    RootsInInterval(usize),
    LowerEndpointNotPositive,
    UpperEndpointNotPositive,
    SampleNotPositive,
}

impl fmt::Display for FailedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedCheck::RootsInInterval(n) => write!(f, "{n} root(s) in the interval"),
            FailedCheck::LowerEndpointNotPositive => f.write_str("value at lower endpoint is not positive"),
            FailedCheck::UpperEndpointNotPositive => f.write_str("value at upper endpoint is not positive"),
            FailedCheck::SampleNotPositive => f.write_str("value at sample point is not positive"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PositivityReport {
    pub verdict: Verdict,
    pub roots: RootCount,
    pub lo_sign: Ordering,
    pub hi_sign: Ordering,
    pub sample: Rational,
    pub sample_sign: Ordering,
    pub failed: Option<FailedCheck>,
}

/// Certifies `p > 0` on the closed interval: no roots inside, positive at both
/// endpoints and at `sample`.
pub fn certify_positive(p: &UniPoly, iv: &Interval, sample: &Rational) -> Result<PositivityReport, SturmError> {
    if p.is_constant() {
        let s = p.sign_at(sample);
        let ok = s == Ordering::Greater;
        return Ok(PositivityReport {
            verdict: if ok { Verdict::Positive } else { Verdict::NotCertified },
            roots: RootCount::new(0, 0, Vec::new()),
            lo_sign: s,
            hi_sign: s,
            sample: sample.clone(),
            sample_sign: s,
            failed: (!ok).then_some(FailedCheck::SampleNotPositive),
        });
    }
    let chain = SturmChain::build(p, Normalization::Primitive)?;
    certify_positive_with_chain(&chain, iv, sample)
}

pub fn certify_positive_with_chain(
    chain: &SturmChain,
    iv: &Interval,
    sample: &Rational,
) -> Result<PositivityReport, SturmError> {
    if !iv.contains(sample) {
        return Err(SturmError::Domain("sample point lies outside the interval"));
    }
    let roots = chain.count_roots(iv, &EndpointPolicy::Strict)?;
    let lo_sign = chain.leading_sign_at(&iv.lo);
    let hi_sign = chain.leading_sign_at(&iv.hi);
    let sample_sign = chain.leading_sign_at(sample);
    let failed = if roots.count() != 0 {
        Some(FailedCheck::RootsInInterval(roots.count()))
    } else if lo_sign != Ordering::Greater {
        Some(FailedCheck::LowerEndpointNotPositive)
    } else if hi_sign != Ordering::Greater {
        Some(FailedCheck::UpperEndpointNotPositive)
    } else if sample_sign != Ordering::Greater {
        Some(FailedCheck::SampleNotPositive)
    } else {
        None
    };
    Ok(PositivityReport {
        verdict: if failed.is_none() { Verdict::Positive } else { Verdict::NotCertified },
        roots,
        lo_sign,
        hi_sign,
        sample: sample.clone(),
        sample_sign,
        failed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isolation {
    /// Disjoint half-open intervals `(lo, hi]`, sorted, each holding exactly one distinct root.
    pub intervals: Vec<Interval>,
    /// Offsets applied to bisection midpoints that landed on a root.
    pub midpoint_offsets: Vec<Rational>,
}

/// Isolates every distinct root in `(iv.lo, iv.hi]` into intervals no wider than `width`.
pub fn isolate_roots(p: &UniPoly, iv: &Interval, width: &Rational) -> Result<Isolation, SturmError> {
    if !width.is_positive() {
        return Err(SturmError::Domain("isolation width must be positive"));
    }
    if p.is_constant() {
        return Ok(Isolation { intervals: Vec::new(), midpoint_offsets: Vec::new() });
    }
    let chain = SturmChain::build(p, Normalization::Primitive)?;
    let total = chain.count_roots(iv, &EndpointPolicy::Strict)?;
    let mut intervals = Vec::new();
    let mut offsets = Vec::new();
    let mut pending = vec![(iv.clone(), total.variations_at_lo(), total.variations_at_hi())];
    while let Some((cur, v_lo, v_hi)) = pending.pop() {
        let count = v_lo - v_hi;
        if count == 0 {
            continue;
        }
        if count == 1 && &cur.width() <= width {
            intervals.push(cur);
            continue;
        }
        let span = cur.width();
        let mut mid = cur.midpoint();
        let mut shift = &span / int(4);
        while chain.leading_sign_at(&mid) == Ordering::Equal {
            let moved = cur.midpoint() + &shift;
            offsets.push(&moved - cur.midpoint());
            mid = moved;
            shift /= int(2);
        }
        let v_mid = chain.sign_variations(&mid);
        pending.push((Interval { lo: mid.clone(), hi: cur.hi.clone() }, v_mid, v_hi));
        pending.push((Interval { lo: cur.lo.clone(), hi: mid }, v_lo, v_mid));
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(Isolation { intervals, midpoint_offsets: offsets })
}

/// Quotient `Qi` and positive scale `ci` with `X(i-2) = Qi * X(i-1) - ci * Xi`, for `i >= 2`.
pub fn reconstruction_step(chain: &SturmChain, i: usize) -> Result<(UniPoly, Rational), SturmError> {
    let m = chain.members();
    let (q, r) = m[i - 2].divrem(&m[i - 1])?;
    let target = &m[i];
    let c = -(r.leading().cloned().unwrap_or_else(Rational::zero)) / target.leading().expect("nonzero member");
    Ok((q, c))
}
