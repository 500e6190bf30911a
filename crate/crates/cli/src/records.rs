//! JSON documents written by the subcommands. Every document carries a
//! `schema` tag; big integers are decimal strings.

use markov_core::conjectures::FrobeniusReport;
use markov_core::VerificationReport;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SlopeRecord {
    pub schema: String,
    pub p: u64,
    pub q: u64,
    pub markov: String,
    /// `None` for the boundary slopes 0/1 and 1/1, which sit above the tree.
    pub path: Option<String>,
    pub word: String,
    pub trace: String,
    pub norm: f64,
}

impl SlopeRecord {
    pub const SCHEMA: &'static str = "markov.slope/1";
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ViolationRecord {
    pub p: u64,
    pub q: u64,
    pub i: u64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyRecord {
    pub schema: String,
    pub family: String,
    pub bound: u64,
    pub cases: u64,
    pub violations: Vec<ViolationRecord>,
}

impl VerifyRecord {
    pub const SCHEMA: &'static str = "markov.verify/1";
}

impl From<&VerificationReport> for VerifyRecord {
    fn from(r: &VerificationReport) -> Self {
        VerifyRecord {
            schema: Self::SCHEMA.into(),
            family: r.family.tag().into(),
            bound: r.bound,
            cases: r.cases,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    p: v.p,
                    q: v.q,
                    i: v.i,
                    lhs: v.lhs.to_string(),
                    rhs: v.rhs.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TreeNode {
    pub path: String,
    pub slope: String,
    pub triple: [String; 3],
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TreeRecord {
    pub schema: String,
    pub depth: usize,
    pub nodes: Vec<TreeNode>,
}

impl TreeRecord {
    pub const SCHEMA: &'static str = "markov.tree/1";
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct NormRecord {
    pub schema: String,
    pub x: f64,
    pub y: f64,
    pub lo: f64,
    pub hi: f64,
    pub width: f64,
    pub accuracy_limited: bool,
}

impl NormRecord {
    pub const SCHEMA: &'static str = "markov.norm/1";
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CountRecord {
    pub schema: String,
    pub r: String,
    pub count: u64,
    /// `count / (ln R)²`, natural log; absent for `R = 1`.
    pub c_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<u64>,
}

impl CountRecord {
    pub const SCHEMA: &'static str = "markov.count/1";
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct FrobeniusEntry {
    pub markov: String,
    pub slopes: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct FrobeniusRecord {
    pub schema: String,
    pub bound: String,
    pub count: usize,
    pub duplicates: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numbers: Option<Vec<FrobeniusEntry>>,
}

impl FrobeniusRecord {
    pub const SCHEMA: &'static str = "markov.frobenius/1";

    pub fn new(bound: &BigUint, r: &FrobeniusReport, list: bool) -> Self {
        FrobeniusRecord {
            schema: Self::SCHEMA.into(),
            bound: bound.to_string(),
            count: r.numbers.len(),
            duplicates: r.duplicates.iter().map(ToString::to_string).collect(),
            numbers: list.then(|| {
                r.numbers
                    .iter()
                    .map(|(m, s)| FrobeniusEntry {
                        markov: m.to_string(),
                        slopes: s.iter().map(ToString::to_string).collect(),
                    })
                    .collect()
            }),
        }
    }
}
