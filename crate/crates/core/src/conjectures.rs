//! Monotonicity of Markov numbers along lines of fractions.
//!
//! Three integer families (fixed numerator, fixed denominator, fixed
//! sum) are checked with exact big-integer comparisons; the real-valued
//! statement behind them (the norm increases along the horizontal, vertical
//! and anti-diagonal rays out of the norm ball) is certified with disjoint
//! norm intervals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::indexing::{markov_of_slope, Slope};
use crate::norm::{norm_real, NormInterval, MIN_TOLERANCE};
use crate::triples::walk_tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `m_{p/q} < m_{p/(q+i)}`
    Numerator,
    /// `m_{p/q} < m_{(p+i)/q}`
    Denominator,
    /// `m_{p/q} < m_{(p−i)/(q+i)}`
    Sum,
    /// The real-valued statement, checked with certified intervals.
    Theorem1,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Numerator => "numerator",
            Family::Denominator => "denominator",
            Family::Sum => "sum",
            Family::Theorem1 => "theorem1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "numerator" => Ok(Family::Numerator),
            "denominator" => Ok(Family::Denominator),
            "sum" => Ok(Family::Sum),
            "theorem1" => Ok(Family::Theorem1),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "unknown family".into(),
            }),
        }
    }
}

/// A tuple `(p, q, i)` for which the claimed inequality failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub p: u64,
    pub q: u64,
    pub i: u64,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub family: Family,
    pub bound: u64,
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.violations.is_empty()
    }
}

fn precondition(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(what()))
    }
}

fn coprime(a: u64, b: u64) -> bool {
    a.gcd(&b) == 1
}

fn base_preconditions(p: u64, q: u64, i: u64) -> Result<()> {
    precondition(i > 0, || format!("i = {i} must be positive"))?;
    precondition(p >= 1 && p < q, || {
        format!("need 1 ≤ p < q, got p = {p}, q = {q}")
    })?;
    precondition(coprime(p, q), || format!("gcd({p}, {q}) ≠ 1"))
}

fn slope(p: u64, q: u64) -> Slope {
    Slope::new(p, q).expect("preconditions guarantee a reduced fraction in [0, 1]")
}

/// `m_{p/q} < m_{p/(q+i)}`.
pub fn check_fixed_numerator(p: u64, q: u64, i: u64) -> Result<bool> {
    base_preconditions(p, q, i)?;
    precondition(coprime(p, q + i), || format!("gcd({p}, {}) ≠ 1", q + i))?;
    Ok(markov_of_slope(slope(p, q)) < markov_of_slope(slope(p, q + i)))
}

/// `m_{p/q} < m_{(p+i)/q}`.
pub fn check_fixed_denominator(p: u64, q: u64, i: u64) -> Result<bool> {
    base_preconditions(p, q, i)?;
    precondition(p + i <= q, || format!("p + i = {} exceeds q = {q}", p + i))?;
    precondition(coprime(p + i, q), || format!("gcd({}, {q}) ≠ 1", p + i))?;
    Ok(markov_of_slope(slope(p, q)) < markov_of_slope(slope(p + i, q)))
}

/// `m_{p/q} < m_{(p−i)/(q+i)}`.
pub fn check_fixed_sum(p: u64, q: u64, i: u64) -> Result<bool> {
    base_preconditions(p, q, i)?;
    precondition(i <= p, || format!("p − i = {p} − {i} is negative"))?;
    precondition(coprime(p - i, q + i), || {
        format!("gcd({}, {}) ≠ 1", p - i, q + i)
    })?;
    Ok(markov_of_slope(slope(p, q)) < markov_of_slope(slope(p - i, q + i)))
}

/// Markov numbers of every slope with denominator at most `max_q`, built
/// by one walk of the tree (one flip per slope).
pub struct SlopeTable {
    rows: Vec<Vec<Option<BigUint>>>,
}

impl SlopeTable {
    pub fn new(max_q: u64) -> Self {
        let mut rows: Vec<Vec<Option<BigUint>>> =
            (0..=max_q).map(|q| vec![None; q as usize + 1]).collect();
        rows[1][0] = Some(BigUint::one());
        rows[1][1] = Some(BigUint::from(2u32));
        walk_tree(usize::MAX, |node, _| {
            let (p, q) = node.slope();
            if q > max_q {
                return false;
            }
            rows[q as usize][p as usize] = Some(node.mid.clone());
            true
        });
        SlopeTable { rows }
    }

    pub fn get(&self, p: u64, q: u64) -> Option<&BigUint> {
        self.rows.get(q as usize)?.get(p as usize)?.as_ref()
    }

    fn at(&self, p: u64, q: u64) -> &BigUint {
        self.get(p, q).expect("reduced slope inside the table")
    }
}

/// Check every admissible `(p, q, i)` of a family: `q + i ≤ max_bound` for
/// the numerator and sum families, `q ≤ max_bound` for the denominator
/// family.
pub fn verify_family(family: Family, max_bound: u64) -> Result<VerificationReport> {
    if max_bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "bound {max_bound} is below 2"
        )));
    }
    if family == Family::Theorem1 {
        return Err(Error::InvalidArgument(
            "the real-valued family is checked point by point with theorem1_check_real".into(),
        ));
    }
    let start = Instant::now();
    let table = SlopeTable::new(max_bound);
    let per_q: Vec<(u64, Vec<Violation>)> = (2..=max_bound)
        .into_par_iter()
        .map(|q| {
            let mut cases = 0u64;
            let mut bad = Vec::new();
            let mut check = |p: u64, i: u64, lhs: &BigUint, rhs: &BigUint| {
                cases += 1;
                if lhs >= rhs {
                    bad.push(Violation {
                        p,
                        q,
                        i,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    });
                }
            };
            for p in (1..q).filter(|&p| coprime(p, q)) {
                let lhs = table.at(p, q);
                match family {
                    Family::Numerator => {
                        for i in (1..=max_bound - q).filter(|&i| coprime(p, q + i)) {
                            check(p, i, lhs, table.at(p, q + i));
                        }
                    }
                    Family::Denominator => {
                        for i in (1..=q - p).filter(|&i| coprime(p + i, q)) {
                            check(p, i, lhs, table.at(p + i, q));
                        }
                    }
                    Family::Sum => {
                        for i in (1..=p.min(max_bound - q)).filter(|&i| coprime(p - i, q + i)) {
                            check(p, i, lhs, table.at(p - i, q + i));
                        }
                    }
                    Family::Theorem1 => unreachable!(),
                }
            }
            (cases, bad)
        })
        .collect();
    let (cases, violations) = per_q
        .into_iter()
        .fold((0, Vec::new()), |(n, mut all), (c, v)| {
            all.extend(v);
            (n + c, all)
        });
    Ok(VerificationReport {
        family,
        bound: max_bound,
        cases,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Which of the three real inequalities to certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremPart {
    /// `‖(q, p)‖ < ‖(q + i, p)‖`
    Horizontal,
    /// `‖(q, p)‖ < ‖(q, p + i)‖`
    Vertical,
    /// `‖(q, p)‖ < ‖(q + i, p − i)‖` for `p < q`
    Diagonal,
}

impl TheoremPart {
    pub const ALL: [TheoremPart; 3] = [
        TheoremPart::Horizontal,
        TheoremPart::Vertical,
        TheoremPart::Diagonal,
    ];

    /// The point compared against `(q, p)`.
    pub fn moved(self, q: f64, p: f64, i: f64) -> (f64, f64) {
        match self {
            TheoremPart::Horizontal => (q + i, p),
            TheoremPart::Vertical => (q, p + i),
            TheoremPart::Diagonal => (q + i, p - i),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Certification {
    /// `lhs.hi < rhs.lo`.
    Certified {
        lhs: NormInterval,
        rhs: NormInterval,
    },
    Inconclusive {
        lhs: NormInterval,
        rhs: NormInterval,
    },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified { .. })
    }
}

fn enclose(x: f64, y: f64, tol: f64) -> Result<NormInterval> {
    if x == 0.0 && y == 0.0 {
        return Ok(NormInterval { lo: 0.0, hi: 0.0 });
    }
    match norm_real(x, y, tol) {
        Ok(i) | Err(Error::AccuracyLimit { interval: i, .. }) => Ok(i),
        Err(e) => Err(e),
    }
}

/// Certify `‖(q, p)‖ < ‖moved point‖` for real `q, p ≥ 0` and `i > 0`.
///
/// Tightens the tolerance up to three times (by factors of 100, not below
/// [`MIN_TOLERANCE`]) before giving up. For the diagonal part `p − i < 0`
/// leaves the first quadrant and is only accepted with `allow_extension`.
pub fn theorem1_check_real(
    q: f64,
    p: f64,
    i: f64,
    part: TheoremPart,
    tol: f64,
    allow_extension: bool,
) -> Result<Certification> {
    let finite = q.is_finite() && p.is_finite() && i.is_finite();
    precondition(finite && q >= 0.0 && p >= 0.0, || {
        format!("need finite q, p ≥ 0, got ({q}, {p})")
    })?;
    precondition(i > 0.0, || format!("i = {i} must be positive"))?;
    if part == TheoremPart::Diagonal {
        precondition(p < q, || {
            format!("diagonal part needs p < q, got ({q}, {p})")
        })?;
        precondition(allow_extension || p - i >= 0.0, || {
            format!("p − i = {} leaves the first quadrant", p - i)
        })?;
    }
    let (mq, mp) = part.moved(q, p, i);
    let mut tol = tol.max(MIN_TOLERANCE);
    let mut last = None;
    for _ in 0..4 {
        let lhs = enclose(q, p, tol)?;
        let rhs = enclose(mq, mp, tol)?;
        if lhs.strictly_below(&rhs) {
            return Ok(Certification::Certified { lhs, rhs });
        }
        last = Some((lhs, rhs));
        tol = (tol / 100.0).max(MIN_TOLERANCE);
    }
    let (lhs, rhs) = last.expect("at least one attempt");
    Ok(Certification::Inconclusive { lhs, rhs })
}

/// Result of scanning the tree for repeated maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    /// Every Markov number up to the bound with the slopes at which it
    /// occurs as a triple maximum, by increasing value.
    pub numbers: Vec<(BigUint, Vec<Slope>)>,
    /// Values occurring at two or more slopes.
    pub duplicates: Vec<BigUint>,
}

impl FrobeniusReport {
    pub fn values(&self) -> Vec<BigUint> {
        self.numbers.iter().map(|(m, _)| m.clone()).collect()
    }
}

/// Collect the maxima of all triples with maximum at most `value_bound` and
/// report values carried by more than one slope. The walk prunes at the
/// bound, which is sound because maxima strictly increase down the tree.
pub fn frobenius_scan(value_bound: &BigUint) -> FrobeniusReport {
    let mut seen: BTreeMap<BigUint, Vec<Slope>> = BTreeMap::new();
    for (m, s) in [(1u32, (0, 1)), (2, (1, 1))] {
        if BigUint::from(m) <= *value_bound {
            seen.entry(m.into()).or_default().push(slope(s.0, s.1));
        }
    }
    walk_tree(usize::MAX, |node, _| {
        if node.mid > *value_bound {
            return false;
        }
        let (p, q) = node.slope();
        seen.entry(node.mid.clone()).or_default().push(slope(p, q));
        true
    });
    let duplicates = seen
        .iter()
        .filter(|(_, s)| s.len() > 1)
        .map(|(m, _)| m.clone())
        .collect();
    FrobeniusReport {
        numbers: seen.into_iter().collect(),
        duplicates,
    }
}
