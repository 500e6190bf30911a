//! Rational indexing of Markov numbers.
//!
//! A reduced fraction `p/q ∈ [0, 1]` names a Markov number `m_{p/q}` in two
//! independent ways:
//!
//! 1. Stern–Brocot descent: walk from `1/2` towards `p/q`, carrying the
//!    Markov numbers of the two Farey endpoints and of the mediant; each
//!    step is one Vieta flip.
//! 2. Traces: spell the lower Christoffel word of `p/q` over `{a, b}`,
//!    multiply the generator matrices `A = [[1,1],[1,2]]`,
//!    `B = [[2,1],[1,1]]` and take a third of the trace.
//!
//! The boundary fractions `0/1` and `1/1` carry the values 1 and 2.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::norm::LatticeVector;
use crate::triples::{kappa, Dir, TreePath};

/// A reduced fraction `p/q` with `0 ≤ p ≤ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: u64,
    q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let reason = if q == 0 {
            Some("denominator is zero")
        } else if p > q {
            Some("fraction exceeds 1")
        } else if p.gcd(&q) != 1 {
            Some("fraction is not reduced")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidSlope { p, q, reason }),
            None => Ok(Slope { p, q }),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_boundary(&self) -> bool {
        self.p == 0 || self.p == self.q
    }

    /// The lattice point `(q, p)`.
    pub fn vector(&self) -> LatticeVector {
        LatticeVector::new(self.q as i64, self.p as i64)
    }

    /// All slopes with denominator at most `max_q`, sorted by `(q, p)`.
    pub fn all_up_to(max_q: u64) -> impl Iterator<Item = Slope> {
        (1..=max_q).flat_map(|q| (0..=q).filter_map(move |p| Slope::new(p, q).ok()))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| err("expected p/q"))?;
        let p = p.trim().parse::<u64>().map_err(|e| err(&e.to_string()))?;
        let q = q.trim().parse::<u64>().map_err(|e| err(&e.to_string()))?;
        Slope::new(p, q)
    }
}

/// `(p, q)` of the fraction compared against `s`: `p/q` vs `s.p/s.q`.
fn cmp_frac(p: u64, q: u64, s: &Slope) -> std::cmp::Ordering {
    (u128::from(p) * u128::from(s.q)).cmp(&(u128::from(s.p) * u128::from(q)))
}

/// Path from `1/2` to `s` in the Stern–Brocot tree of `[0, 1]`.
pub fn stern_brocot_path(s: Slope) -> Result<TreePath> {
    if s.is_boundary() {
        return Err(Error::OutOfRange { p: s.p, q: s.q });
    }
    let (mut lo, mut hi) = ((0u64, 1u64), (1u64, 1u64));
    let mut path = TreePath::new();
    loop {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        match cmp_frac(m.0, m.1, &s) {
            std::cmp::Ordering::Equal => return Ok(path),
            std::cmp::Ordering::Greater => {
                path.push(Dir::L);
                hi = m;
            }
            std::cmp::Ordering::Less => {
                path.push(Dir::R);
                lo = m;
            }
        }
    }
}

/// `[[3k, −1], [1, 0]]^n`: advances `(xⱼ, xⱼ₋₁)` of `xⱼ₊₁ = 3k·xⱼ − xⱼ₋₁` by `n`.
fn flip_run_matrix(kept: &BigUint, n: u64) -> IntMatrix2 {
    let step = IntMatrix2::new(
        BigInt::from(3u32 * kept),
        BigInt::from(-1),
        BigInt::one(),
        BigInt::zero(),
    );
    step.pow(n)
}

fn to_unsigned(v: BigInt) -> BigUint {
    v.to_biguint().expect("Markov numbers are positive")
}

/// The Markov number `m_{p/q}`.
///
/// Descends the Stern–Brocot tree one run (partial quotient) at a time: a
/// run of `n` equal steps keeps one endpoint value `k` fixed and advances
/// the linear recurrence `x ↦ 3k·x − x_prev`, which is a matrix power.
pub fn markov_of_slope(s: Slope) -> BigUint {
    if s.p == 0 {
        return BigUint::one();
    }
    if s.p == s.q {
        return BigUint::from(2u32);
    }
    let (p, q) = (u128::from(s.p), u128::from(s.q));
    let (mut lo, mut hi) = ((0u128, 1u128), (1u128, 1u128));
    let (mut left, mut right, mut mid) = (BigUint::one(), BigUint::from(2u32), BigUint::from(5u32));
    loop {
        let node = (lo.0 + hi.0, lo.1 + hi.1);
        if node.0 * q == p * node.1 {
            return mid;
        }
        // Distances of p/q from the endpoints, as cross products.
        let above_lo = p * lo.1 - q * lo.0;
        let below_hi = q * hi.0 - p * hi.1;
        if node.0 * q > p * node.1 {
            // Left run: the j-th node is ((j+1)·lo + hi); stay while p/q is below it.
            let n = below_hi.div_ceil(above_lo) - 1;
            let m = flip_run_matrix(&left, n as u64);
            let (x, x_prev) = (BigInt::from(mid), BigInt::from(right));
            let new_mid = &m.a * &x + &m.b * &x_prev;
            let new_right = &m.c * &x + &m.d * &x_prev;
            mid = to_unsigned(new_mid);
            right = to_unsigned(new_right);
            hi = (n * lo.0 + hi.0, n * lo.1 + hi.1);
        } else {
            let n = above_lo.div_ceil(below_hi) - 1;
            let m = flip_run_matrix(&right, n as u64);
            let (x, x_prev) = (BigInt::from(mid), BigInt::from(left));
            let new_mid = &m.a * &x + &m.b * &x_prev;
            let new_left = &m.c * &x + &m.d * &x_prev;
            mid = to_unsigned(new_mid);
            left = to_unsigned(new_left);
            lo = (lo.0 + n * hi.0, lo.1 + n * hi.1);
        }
    }
}

/// A letter of a positive word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

/// The lower Christoffel word of a slope: the lattice path from `(0, 0)`
/// to `(q, p)` that stays below the segment, with `a` a horizontal step and
/// `b` a vertical one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChristoffelWord {
    letters: Vec<Letter>,
}

impl ChristoffelWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Swap `a ↔ b` and reverse.
    pub fn exchange_reverse(&self) -> ChristoffelWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match l {
                Letter::A => Letter::B,
                Letter::B => Letter::A,
            })
            .collect();
        ChristoffelWord { letters }
    }

    pub fn to_free_word(&self) -> FreeWord {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::A => Gen::A,
                Letter::B => Gen::B,
            })
            .collect()
    }
}

impl fmt::Display for ChristoffelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| match l {
            Letter::A => f.write_str("a"),
            Letter::B => f.write_str("b"),
        })
    }
}

/// Letter `i` (1-based) of the word of `p/q` is `b` exactly when
/// `⌊i·p/(p+q)⌋` increases.
pub fn christoffel_word(s: Slope) -> ChristoffelWord {
    let (p, n) = (u128::from(s.p), u128::from(s.p + s.q));
    let letters = (1..=n)
        .map(|i| {
            if (i * p) / n > ((i - 1) * p) / n {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    ChristoffelWord { letters }
}

/// A 2×2 integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    fn small(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::small(1, 0, 0, 1)
    }

    /// Generator for `a`: `[[1,1],[1,2]]`.
    pub fn gen_a() -> Self {
        Self::small(1, 1, 1, 2)
    }

    /// Generator for `b`: `[[2,1],[1,1]]`.
    pub fn gen_b() -> Self {
        Self::small(2, 1, 1, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a determinant-one matrix.
    pub fn unimodular_inverse(&self) -> Self {
        debug_assert!(self.det().is_one());
        IntMatrix2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = IntMatrix2::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

/// Product of the generator matrices along `w`.
pub fn word_matrix(w: &ChristoffelWord) -> IntMatrix2 {
    free_word_matrix(&w.to_free_word())
}

/// `tr(word_matrix(christoffel_word(s))) / 3`; the division must be exact.
pub fn markov_of_slope_via_trace(s: Slope) -> Result<BigUint> {
    third_of_trace(&word_matrix(&christoffel_word(s)).trace())
}

fn third_of_trace(t: &BigInt) -> Result<BigUint> {
    let (m, r) = t.abs().div_rem(&BigInt::from(3));
    if !r.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "trace {t} is not divisible by 3"
        )));
    }
    Ok(to_unsigned(m))
}

/// Markov number of an arbitrary primitive lattice vector, read off the
/// trace of its Christoffel word.
///
/// `(a, b)` and `(−a, −b)` are the same curve with opposite orientation
/// (inverse matrices, same trace). For `a, b ≥ 0` the word is spelled in
/// `a, b`; for `b < 0` the letter `b` is replaced by its inverse.
pub fn markov_of_vector_via_trace(v: LatticeVector) -> Result<BigUint> {
    if !v.is_primitive() {
        return Err(Error::InvalidArgument(format!("{v} is not primitive")));
    }
    let v = if v.a < 0 || (v.a == 0 && v.b < 0) {
        -v
    } else {
        v
    };
    let (q, p) = (v.a as u64, v.b.unsigned_abs());
    let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
    let mut word = christoffel_word(Slope::new(lo, hi)?);
    if p > q {
        // Christoffel word of the transposed slope, letters exchanged back.
        word = ChristoffelWord {
            letters: word
                .letters
                .iter()
                .map(|l| {
                    if *l == Letter::A {
                        Letter::B
                    } else {
                        Letter::A
                    }
                })
                .collect(),
        };
    }
    let free: FreeWord = word
        .to_free_word()
        .letters
        .into_iter()
        .map(|g| if v.b < 0 && g == Gen::B { Gen::BInv } else { g })
        .collect();
    third_of_trace(&free_word_matrix(&free).trace())
}

/// A generator of the free group on `a, b`, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    B,
    AInv,
    BInv,
}

impl Gen {
    pub fn inverse(self) -> Gen {
        match self {
            Gen::A => Gen::AInv,
            Gen::B => Gen::BInv,
            Gen::AInv => Gen::A,
            Gen::BInv => Gen::B,
        }
    }

    fn matrix(self) -> IntMatrix2 {
        match self {
            Gen::A => IntMatrix2::gen_a(),
            Gen::B => IntMatrix2::gen_b(),
            Gen::AInv => IntMatrix2::gen_a().unimodular_inverse(),
            Gen::BInv => IntMatrix2::gen_b().unimodular_inverse(),
        }
    }
}

/// A freely reduced word in `a, b, a⁻¹, b⁻¹`.
///
/// Text form: `a`, `b` for generators, `A`, `B` (or `a⁻¹`, `b⁻¹`) for
/// inverses; whitespace is ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<Gen>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn gen(g: Gen) -> Self {
        FreeWord { letters: vec![g] }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Concatenate and cancel.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        self.letters.iter().chain(&other.letters).copied().collect()
    }
}

impl FromIterator<Gen> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut letters: Vec<Gen> = Vec::new();
        for g in iter {
            if letters.last() == Some(&g.inverse()) {
                letters.pop();
            } else {
                letters.push(g);
            }
        }
        FreeWord { letters }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|g| {
            f.write_str(match g {
                Gen::A => "a",
                Gen::B => "b",
                Gen::AInv => "A",
                Gen::BInv => "B",
            })
        })
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let g = match c {
                'a' => Gen::A,
                'b' => Gen::B,
                'A' => Gen::AInv,
                'B' => Gen::BInv,
                _ => {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: format!("unexpected {c:?}"),
                    })
                }
            };
            if chars.peek() == Some(&'⁻') {
                chars.next();
                if chars.next() != Some('¹') {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: "expected ⁻¹".into(),
                    });
                }
                gens.push(g.inverse());
            } else {
                gens.push(g);
            }
        }
        Ok(gens.into_iter().collect())
    }
}

pub fn free_word_matrix(w: &FreeWord) -> IntMatrix2 {
    w.letters
        .iter()
        .fold(IntMatrix2::identity(), |acc, g| &acc * &g.matrix())
}

/// Image in `ℤ²` under abelianization: signed counts of `a` and `b`.
pub fn abelianize(w: &FreeWord) -> LatticeVector {
    let (mut a, mut b) = (0i64, 0i64);
    for g in &w.letters {
        match g {
            Gen::A => a += 1,
            Gen::AInv => a -= 1,
            Gen::B => b += 1,
            Gen::BInv => b -= 1,
        }
    }
    LatticeVector::new(a, b)
}

/// The elementary Nielsen transformations of a basis pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenMove {
    /// `(u, v) ↦ (v, u)`
    Swap,
    /// `(u, v) ↦ (uv, v)`
    Multiply,
    /// `(u, v) ↦ (uv⁻¹, v)`
    MultiplyInverse,
}

impl NielsenMove {
    pub const ALL: [NielsenMove; 3] = [
        NielsenMove::Swap,
        NielsenMove::Multiply,
        NielsenMove::MultiplyInverse,
    ];

    /// Effect on the abelianized pair `(u, v)`, as `(u', v')` in terms of
    /// `u` and `v`: rows of a unimodular matrix.
    pub fn abelian_matrix(self) -> [[i64; 2]; 2] {
        match self {
            NielsenMove::Swap => [[0, 1], [1, 0]],
            NielsenMove::Multiply => [[1, 1], [0, 1]],
            NielsenMove::MultiplyInverse => [[1, -1], [0, 1]],
        }
    }
}

pub fn nielsen_move(pair: &(FreeWord, FreeWord), kind: NielsenMove) -> (FreeWord, FreeWord) {
    let (u, v) = pair;
    match kind {
        NielsenMove::Swap => (v.clone(), u.clone()),
        NielsenMove::Multiply => (u.concat(v), v.clone()),
        NielsenMove::MultiplyInverse => (u.concat(&v.inverse()), v.clone()),
    }
}

/// Traces `(tr U, tr V, tr UV)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterTriple(pub BigInt, pub BigInt, pub BigInt);

impl CharacterTriple {
    pub fn kappa(&self) -> BigInt {
        kappa(&self.0, &self.1, &self.2)
    }
}

pub fn char_map(pair: &(FreeWord, FreeWord)) -> CharacterTriple {
    let u = free_word_matrix(&pair.0);
    let v = free_word_matrix(&pair.1);
    let uv = &u * &v;
    CharacterTriple(u.trace(), v.trace(), uv.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triples::LabeledTriple;
    use proptest::prelude::*;

    fn s(p: u64, q: u64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn w(text: &str) -> FreeWord {
        text.parse().unwrap()
    }

    #[test]
    fn slope_validation() {
        assert!(Slope::new(2, 4).is_err());
        assert!(Slope::new(3, 2).is_err());
        assert!(Slope::new(0, 0).is_err());
        assert!(Slope::new(0, 2).is_err());
        assert_eq!("2/3".parse::<Slope>().unwrap(), s(2, 3));
        assert!("2/".parse::<Slope>().is_err());
        assert!(matches!(
            "2/4".parse::<Slope>(),
            Err(Error::InvalidSlope { .. })
        ));
    }

    #[test]
    fn stern_brocot_examples() {
        assert_eq!(stern_brocot_path(s(1, 2)).unwrap().to_string(), "");
        assert_eq!(stern_brocot_path(s(1, 3)).unwrap().to_string(), "L");
        assert_eq!(stern_brocot_path(s(3, 5)).unwrap().to_string(), "RL");
        assert!(matches!(
            stern_brocot_path(s(0, 1)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            stern_brocot_path(s(1, 1)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn markov_of_slope_examples() {
        let m = |p, q| markov_of_slope(s(p, q));
        assert_eq!(
            (m(0, 1), m(1, 2), m(1, 1)),
            (1u32.into(), 5u32.into(), 2u32.into())
        );
        assert_eq!(m(2, 3), 29u32.into());
        assert_eq!(m(1, 4), 34u32.into());
        assert_eq!(m(1, 3), 13u32.into());
        assert_eq!(m(2, 5), 194u32.into());
        assert_eq!(m(3, 4), 169u32.into());
    }

    #[test]
    fn run_length_descent_matches_stepwise_descent() {
        for sl in Slope::all_up_to(80).filter(|sl| !sl.is_boundary()) {
            let path = stern_brocot_path(sl).unwrap();
            let node = LabeledTriple::branch_root().descend(&path);
            assert_eq!(node.slope(), (sl.p(), sl.q()));
            assert_eq!(markov_of_slope(sl), node.mid, "{sl}");
        }
    }

    /// Lattice path under the segment (0,0)→(q,p), built by taking a
    /// vertical step whenever the point reached stays on or below the line.
    fn brute_christoffel(p: u64, q: u64) -> String {
        let (mut x, mut y) = (0u64, 0u64);
        let mut out = String::new();
        while (x, y) != (q, p) {
            if y < p && (y + 1) * q <= p * x {
                y += 1;
                out.push('b');
            } else {
                x += 1;
                out.push('a');
            }
        }
        out
    }

    #[test]
    fn christoffel_examples() {
        assert_eq!(christoffel_word(s(0, 1)).to_string(), "a");
        assert_eq!(christoffel_word(s(1, 2)).to_string(), "aab");
        assert_eq!(christoffel_word(s(2, 3)).to_string(), "aabab");
        assert_eq!(christoffel_word(s(1, 1)).to_string(), "ab");
        for sl in Slope::all_up_to(40) {
            assert_eq!(
                christoffel_word(sl).to_string(),
                brute_christoffel(sl.p(), sl.q()),
                "{sl}"
            );
        }
    }

    #[test]
    fn word_matrix_examples() {
        let tr = |p, q| word_matrix(&christoffel_word(s(p, q))).trace();
        assert_eq!(tr(0, 1), 3.into());
        assert_eq!(tr(1, 2), 15.into());
        assert_eq!(tr(2, 3), 87.into());
        assert_eq!(markov_of_slope_via_trace(s(1, 2)).unwrap(), 5u32.into());
        assert_eq!(markov_of_slope_via_trace(s(1, 3)).unwrap(), 13u32.into());
        assert_eq!(markov_of_slope_via_trace(s(2, 3)).unwrap(), 29u32.into());
    }

    #[test]
    fn trace_oracle_matches_descent_up_to_60() {
        for sl in Slope::all_up_to(60) {
            let word = christoffel_word(sl);
            let m = word_matrix(&word);
            assert!(m.det().is_one());
            assert_eq!(abelianize(&word.to_free_word()), sl.vector());
            assert_eq!(
                markov_of_slope_via_trace(sl).unwrap(),
                markov_of_slope(sl),
                "{sl}"
            );
            let swapped = word_matrix(&word.exchange_reverse()).trace();
            assert_eq!(swapped, m.trace(), "{sl}");
        }
    }

    #[test]
    fn vector_trace_oracle_on_small_vectors() {
        let m = |a, b| markov_of_vector_via_trace(LatticeVector::new(a, b)).unwrap();
        assert_eq!(m(1, 0), 1u32.into());
        assert_eq!(m(0, 1), 1u32.into());
        assert_eq!(m(-1, 1), 1u32.into());
        assert_eq!(m(1, -1), 1u32.into());
        assert_eq!(m(1, 1), 2u32.into());
        assert_eq!(m(2, -1), 2u32.into());
        assert_eq!(m(1, 2), 5u32.into());
        assert_eq!(m(-2, -1), 5u32.into());
        assert!(markov_of_vector_via_trace(LatticeVector::new(2, 2)).is_err());
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(abelianize(&w("aab")), LatticeVector::new(2, 1));
        assert_eq!(abelianize(&w("")), LatticeVector::new(0, 0));
        assert_eq!(abelianize(&w("ab a⁻¹")), LatticeVector::new(0, 1));
        assert_eq!(w("ab a⁻¹"), w("abA"));
        assert_eq!(w("abBa").to_string(), "aa");
        assert!("abc".parse::<FreeWord>().is_err());
    }

    #[test]
    fn nielsen_examples() {
        let basis = (w("a"), w("b"));
        assert_eq!(
            nielsen_move(&basis, NielsenMove::Multiply),
            (w("ab"), w("b"))
        );
        assert_eq!(nielsen_move(&basis, NielsenMove::Swap), (w("b"), w("a")));
        assert_eq!(
            nielsen_move(&basis, NielsenMove::MultiplyInverse),
            (w("aB"), w("b"))
        );
    }

    #[test]
    fn char_map_examples() {
        let basis = (w("a"), w("b"));
        let c = char_map(&basis);
        assert_eq!(c, CharacterTriple(3.into(), 3.into(), 6.into()));
        assert!(c.kappa().is_zero());
        let c = char_map(&nielsen_move(&basis, NielsenMove::Multiply));
        assert_eq!(c, CharacterTriple(6.into(), 3.into(), 15.into()));
        assert!(c.kappa().is_zero());
    }

    fn apply(
        m: [[i64; 2]; 2],
        pair: (LatticeVector, LatticeVector),
    ) -> (LatticeVector, LatticeVector) {
        let (u, v) = pair;
        let comb =
            |r: [i64; 2]| LatticeVector::new(r[0] * u.a + r[1] * v.a, r[0] * u.b + r[1] * v.b);
        (comb(m[0]), comb(m[1]))
    }

    proptest! {
        #[test]
        fn nielsen_sequences_preserve_kappa_and_abelianize_linearly(
            moves in proptest::collection::vec(0usize..3, 0..=50)
        ) {
            let mut pair = (w("a"), w("b"));
            let mut ab = (LatticeVector::new(1, 0), LatticeVector::new(0, 1));
            for k in moves {
                let mv = NielsenMove::ALL[k];
                pair = nielsen_move(&pair, mv);
                ab = apply(mv.abelian_matrix(), ab);
                prop_assert_eq!((abelianize(&pair.0), abelianize(&pair.1)), ab);
                prop_assert!(char_map(&pair).kappa().is_zero());
            }
        }

        #[test]
        fn descent_and_trace_agree(q in 2u64..400, p in 1u64..400) {
            prop_assume!(p < q);
            if let Ok(sl) = Slope::new(p, q) {
                prop_assert_eq!(markov_of_slope(sl), markov_of_slope_via_trace(sl).unwrap());
            }
        }
    }
}
