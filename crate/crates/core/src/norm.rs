//! The stable norm on `ℤ²` and its convex extension to `ℝ²`.
//!
//! At a primitive lattice point `(q, p)` in the fundamental cone
//! `0 ≤ p ≤ q` the norm is `arccosh(3·m_{p/q} / 2)`, half the length of the
//! simple closed geodesic on the modular torus in that homology class.
//! It is homogeneous, invariant under a dihedral group of order 12 and
//! convex; at a real point it is enclosed between a chord (from above)
//! and two extended secants (from below) spanned by Farey neighbours.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::indexing::{markov_of_slope, Slope};
use crate::interval::Interval;

/// A point of `ℤ²`, read as a homology class of the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub a: i64,
    pub b: i64,
}

impl LatticeVector {
    pub const fn new(a: i64, b: i64) -> Self {
        LatticeVector { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn gcd(&self) -> u64 {
        self.a.unsigned_abs().gcd(&self.b.unsigned_abs())
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    /// `(g, v / g)` with `g` the gcd of the entries.
    pub fn primitive_part(&self) -> (u64, LatticeVector) {
        let g = self.gcd();
        if g == 0 {
            return (0, *self);
        }
        (g, LatticeVector::new(self.a / g as i64, self.b / g as i64))
    }

    pub fn scale(&self, n: i64) -> LatticeVector {
        LatticeVector::new(self.a * n, self.b * n)
    }

    pub fn cross(&self, o: &LatticeVector) -> i64 {
        self.a * o.b - self.b * o.a
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.a, -self.b)
    }
}

impl std::ops::Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.a + o.a, self.b + o.b)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// An element of the order-12 group generated by `−I`, the coordinate
/// swap and the order-6 rotation `M = [[0, −1], [1, 1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    m: [[i64; 2]; 2],
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement {
        m: [[1, 0], [0, 1]],
    };
    pub const ROTATION: SymmetryElement = SymmetryElement {
        m: [[0, -1], [1, 1]],
    };
    pub const SWAP: SymmetryElement = SymmetryElement {
        m: [[0, 1], [1, 0]],
    };

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn compose(&self, o: &SymmetryElement) -> SymmetryElement {
        let (a, b) = (self.m, o.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        SymmetryElement {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn apply(&self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(
            self.m[0][0] * v.a + self.m[0][1] * v.b,
            self.m[1][0] * v.a + self.m[1][1] * v.b,
        )
    }

    fn apply_big(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (
            self.m[0][0] * x + self.m[0][1] * y,
            self.m[1][0] * x + self.m[1][1] * y,
        )
    }

    /// The twelve elements in a fixed order: `Mᵏ` then `Mᵏ·S` for `k = 0..6`.
    pub fn all() -> [SymmetryElement; 12] {
        let mut out = [Self::IDENTITY; 12];
        let mut rot = Self::IDENTITY;
        for k in 0..6 {
            out[k] = rot;
            out[k + 6] = rot.compose(&Self::SWAP);
            rot = rot.compose(&Self::ROTATION);
        }
        out
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

/// `arccosh(t / 2)` for an integer `t > 2`, without converting huge
/// integers to floating point: for large `t` it equals
/// `ln t − ln(2/(1 + √(1 − 4/t²)))`, and the correction is below `1/t²`.
fn arccosh_half(t: &BigUint) -> f64 {
    if t.bits() <= 52 {
        let t = t.to_f64().expect("52-bit value");
        return (t / 2.0).acosh();
    }
    ln_big(t)
}

/// Natural logarithm of a positive integer from its bit length and
/// leading 64 bits.
pub fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_f64().expect("64-bit value").ln();
    }
    let shift = bits - 64;
    let top = (n >> shift)
        .to_u64()
        .expect("64 bits")
        .to_f64()
        .expect("finite");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Geodesic length `2·arccosh(|t| / 2)` of a hyperbolic element with trace `t`.
pub fn length_from_trace(t: &BigInt) -> Result<f64> {
    let abs = t.abs().to_biguint().expect("non-negative");
    if abs <= BigUint::from(2u32) {
        return Err(Error::NotHyperbolic(t.to_string()));
    }
    Ok(2.0 * arccosh_half(&abs))
}

/// `arccosh(3m / 2)`: the norm of the primitive class carrying Markov number `m`.
pub fn norm_of_markov(m: &BigUint) -> f64 {
    arccosh_half(&(m * 3u32))
}

/// Relative error allowed for [`norm_of_markov`] when it feeds a certified
/// bound: 16 ulps, several times what `acosh`/`ln` actually lose.
const NORM_REL_ERR: f64 = 1.0 / (1u64 << 48) as f64;

fn norm_interval_of_markov(m: &BigUint) -> Interval {
    Interval::around(norm_of_markov(m), NORM_REL_ERR)
}

/// Move a nonzero vector into the fundamental cone `0 ≤ p ≤ q`, returning
/// `(w, g)` with `w = g·v = (q, p)`.
pub fn canonicalize(v: LatticeVector) -> Result<(LatticeVector, SymmetryElement)> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    SymmetryElement::all()
        .into_iter()
        .map(|g| (g.apply(v), g))
        .find(|(w, _)| 0 <= w.b && w.b <= w.a)
        .ok_or_else(|| Error::InternalInconsistency(format!("no symmetry maps {v} into the cone")))
}

/// Markov number of a primitive vector (any quadrant).
pub fn markov_at(v: LatticeVector) -> Result<BigUint> {
    if !v.is_primitive() {
        return Err(Error::InvalidArgument(format!("{v} is not primitive")));
    }
    let (w, _) = canonicalize(v)?;
    Ok(markov_of_slope(Slope::new(w.b as u64, w.a as u64)?))
}

/// Stable norm of a nonzero lattice vector: `g · arccosh(3m/2)` where `g`
/// is the gcd and `m` the Markov number of the primitive part.
pub fn stable_norm(v: LatticeVector) -> Result<f64> {
    let (g, prim) = v.primitive_part();
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(g as f64 * norm_of_markov(&markov_at(prim)?))
}

/// Certified enclosure of the norm of a nonzero lattice vector.
pub fn lattice_norm_interval(v: LatticeVector) -> Result<NormInterval> {
    let (g, prim) = v.primitive_part();
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    let n = norm_interval_of_markov(&markov_at(prim)?);
    Ok(NormInterval::from_interval(Interval::point(g as f64) * n))
}

/// Trace of `Mᵍ` for a matrix `M ∈ SL(2, ℤ)` of trace `3m`:
/// `t₀ = 2`, `t₁ = 3m`, `t_{k+1} = 3m·t_k − t_{k−1}`.
fn power_trace(m: &BigUint, g: u64) -> BigInt {
    let t1 = BigInt::from(3u32 * m);
    let (mut prev, mut cur) = (BigInt::from(2), t1.clone());
    if g == 0 {
        return prev;
    }
    for _ in 1..g {
        let next = &t1 * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn norm_trace(v: LatticeVector) -> Result<BigInt> {
    let (g, prim) = v.primitive_part();
    Ok(power_trace(&markov_at(prim)?, g))
}

/// How `‖u + v‖ < ‖u‖ + ‖v‖` was established.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriangleCertificate {
    /// The enclosure of `‖u + v‖` lies below that of `‖u‖ + ‖v‖`.
    Intervals {
        sum: NormInterval,
        bound: NormInterval,
    },
    /// The gap is below `f64` resolution; decided exactly from traces.
    ExactTraces,
    /// The exact comparison found `‖u + v‖ ≥ ‖u‖ + ‖v‖`.
    Violated,
}

/// Decide the strict triangle inequality for non-parallel `u, v`.
///
/// With `eˢ` the larger eigenvalue of a matrix of trace `t`, so that
/// `t = 2·cosh(s)`, the inequality `s_w < s_u + s_v` is equivalent to
/// `2t_w − t_u·t_v < √((t_u² − 4)(t_v² − 4))`, which is checked in
/// integers when the intervals overlap.
pub fn certify_triangle(u: LatticeVector, v: LatticeVector) -> Result<TriangleCertificate> {
    if u.cross(&v) == 0 {
        return Err(Error::InvalidArgument(format!("{u} and {v} are parallel")));
    }
    let w = u + v;
    let sum = lattice_norm_interval(w)?;
    let (nu, nv) = (lattice_norm_interval(u)?, lattice_norm_interval(v)?);
    let bound =
        NormInterval::from_interval(Interval::new(nu.lo, nu.hi) + Interval::new(nv.lo, nv.hi));
    if sum.strictly_below(&bound) {
        return Ok(TriangleCertificate::Intervals { sum, bound });
    }
    let (tu, tv, tw) = (norm_trace(u)?, norm_trace(v)?, norm_trace(w)?);
    let lhs: BigInt = 2 * tw - &tu * &tv;
    let four = BigInt::from(4);
    let holds = lhs.is_negative() || &lhs * &lhs < (&tu * &tu - &four) * (&tv * &tv - &four);
    Ok(if holds {
        TriangleCertificate::ExactTraces
    } else {
        TriangleCertificate::Violated
    })
}

/// A certified enclosure `[lo, hi]` of a norm value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormInterval {
    pub lo: f64,
    pub hi: f64,
}

impl NormInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &NormInterval) -> bool {
        self.hi < other.lo
    }

    fn from_interval(i: Interval) -> Self {
        NormInterval {
            lo: i.lo.max(0.0),
            hi: i.hi.max(0.0),
        }
    }
}

/// Cap on Farey refinements in [`norm_real`].
pub const MAX_REFINEMENTS: usize = 64;

/// Smallest tolerance [`norm_real`] accepts.
pub const MIN_TOLERANCE: f64 = 1e-12;

/// `(x, y) = (X, Y)·2^exp` exactly.
fn exact_pair(x: f64, y: f64) -> (BigInt, BigInt, i32) {
    let decode = |v: f64| -> Option<(BigInt, i32)> {
        if v == 0.0 {
            return None;
        }
        let (mant, exp, sign) = Float::integer_decode(v);
        Some((BigInt::from(mant) * i64::from(sign), i32::from(exp)))
    };
    match (decode(x), decode(y)) {
        (None, None) => (BigInt::zero(), BigInt::zero(), 0),
        (Some((mx, ex)), None) => (mx, BigInt::zero(), ex),
        (None, Some((my, ey))) => (BigInt::zero(), my, ey),
        (Some((mx, ex)), Some((my, ey))) => {
            let e = ex.min(ey);
            (mx << (ex - e) as usize, my << (ey - e) as usize, e)
        }
    }
}

/// Certified enclosure of the extended stable norm at the real point `(x, y)`.
///
/// The inputs are taken as the exact binary rationals they represent. The
/// direction is moved into the fundamental cone and bracketed between
/// Farey neighbours `u₁ = (q₁, p₁)`, `u₂ = (q₂, p₂)` (so `det(u₁, u₂) = 1`).
/// Writing `v = α·u₁ + β·u₂` with `α, β ≥ 0`:
///
/// * upper: `‖v‖ ≤ α‖u₁‖ + β‖u₂‖` (the chord);
/// * lower: `‖v‖ ≥ (α+β)‖u₁‖ − β‖u₁ − u₂‖` and
///   `‖v‖ ≥ (α+β)‖u₂‖ − α‖u₁ − u₂‖` (the secants through `u₁ − u₂`,
///   extended past `u₁` resp. `u₂`).
///
/// All three follow from the triangle inequality. The Markov numbers of
/// `u₁`, `u₂`, `u₁ + u₂` and `u₁ − u₂` form Vieta-related triples, so each
/// refinement costs one big-integer flip. A direction that hits a Farey
/// fraction exactly is evaluated at that lattice point.
pub fn norm_real(x: f64, y: f64, tol: f64) -> Result<NormInterval> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidArgument(format!("({x}, {y}) is not finite")));
    }
    if tol.is_nan() || tol < MIN_TOLERANCE {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} below {MIN_TOLERANCE}"
        )));
    }
    let (bx, by, exp) = exact_pair(x, y);
    if bx.is_zero() && by.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (cq, cp) = SymmetryElement::all()
        .iter()
        .map(|g| g.apply_big(&bx, &by))
        .find(|(q, p)| !p.is_negative() && p <= q)
        .expect("the cone is a fundamental domain");

    let scale = |v: &BigInt| Interval::from_scaled_big(v, exp);
    let hit = |num: &BigInt, den: u64, m: &BigUint| -> NormInterval {
        // (cq, cp) = (num/den)·u with ‖u‖ from m.
        let ratio = scale(num) / Interval::point(den as f64);
        NormInterval::from_interval(ratio * norm_interval_of_markov(m))
    };

    // Bracket u1 = (q1, p1) < direction < u2 = (q2, p2).
    let (mut u1, mut u2) = ((1u64, 0u64), (1u64, 1u64));
    let (mut m1, mut m2, mut m12) = (BigUint::one(), BigUint::from(2u32), BigUint::from(5u32));
    if cp.is_zero() {
        return Ok(hit(&cq, 1, &m1));
    }
    if cp == cq {
        return Ok(hit(&cq, 1, &m2));
    }

    let mut best = NormInterval {
        lo: 0.0,
        hi: f64::INFINITY,
    };
    for step in 0..=MAX_REFINEMENTS {
        let alpha = &cq * BigInt::from(u2.1) - &cp * BigInt::from(u2.0);
        let beta = &cp * BigInt::from(u1.0) - &cq * BigInt::from(u1.1);
        debug_assert!(alpha.is_positive() && beta.is_positive());
        let (a, b) = (scale(&alpha), scale(&beta));
        let n1 = norm_interval_of_markov(&m1);
        let n2 = norm_interval_of_markov(&m2);
        let m_diff = 3u32 * &m1 * &m2 - &m12;
        let n0 = norm_interval_of_markov(&m_diff);

        let upper = a * n1 + b * n2;
        let lower = ((a + b) * n1 - b * n0).max((a + b) * n2 - a * n0);
        let current = NormInterval::from_interval(Interval::new(lower.lo, upper.hi));
        best = NormInterval {
            lo: best.lo.max(current.lo),
            hi: best.hi.min(current.hi),
        };
        if best.width() <= tol {
            return Ok(best);
        }
        if step == MAX_REFINEMENTS {
            break;
        }

        let med = (u1.0 + u2.0, u1.1 + u2.1);
        let side = &cp * BigInt::from(med.0) - &cq * BigInt::from(med.1);
        match side.sign() {
            num_bigint::Sign::NoSign => {
                return Ok(hit(&cq, med.0, &m12));
            }
            num_bigint::Sign::Plus => {
                // Direction is above the mediant: it becomes the new lower end.
                let next = 3u32 * &m12 * &m2 - &m1;
                u1 = med;
                m1 = std::mem::replace(&mut m12, next);
            }
            num_bigint::Sign::Minus => {
                let next = 3u32 * &m1 * &m12 - &m2;
                u2 = med;
                m2 = std::mem::replace(&mut m12, next);
            }
        }
    }
    Err(Error::AccuracyLimit {
        interval: best,
        steps: MAX_REFINEMENTS,
    })
}

/// Orders nonzero vectors by polar angle in `[0, 2π)`.
pub fn cmp_angle(u: &LatticeVector, v: &LatticeVector) -> Ordering {
    let half = |w: &LatticeVector| {
        if w.b > 0 || (w.b == 0 && w.a > 0) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&u.cross(v)))
}

/// Lattice directions sampled on the unit sphere: every primitive `(q, p)`
/// of the cone with `q ≤ max_q` and its images under the symmetry group,
/// deduplicated and sorted by angle. Returned with their norms.
pub fn ball_boundary_vectors(max_q: u64) -> Result<Vec<(LatticeVector, f64)>> {
    if max_q == 0 {
        return Err(Error::InvalidArgument("max_q must be at least 1".into()));
    }
    let mut out: Vec<(LatticeVector, f64)> = Vec::new();
    for s in Slope::all_up_to(max_q) {
        let v = s.vector();
        let n = norm_of_markov(&markov_of_slope(s));
        out.extend(SymmetryElement::all().iter().map(|g| (g.apply(v), n)));
    }
    out.sort_by(|x, y| cmp_angle(&x.0, &y.0));
    out.dedup_by(|x, y| x.0 == y.0);
    Ok(out)
}

/// Points `v / ‖v‖` of the unit level set, sorted by angle.
pub fn ball_boundary_sample(max_q: u64) -> Result<Vec<(f64, f64)>> {
    Ok(ball_boundary_vectors(max_q)?
        .into_iter()
        .map(|(v, n)| (v.a as f64 / n, v.b as f64 / n))
        .collect())
}

/// For a closed polygon listed counter-clockwise, the smallest signed
/// distance of a vertex outside the chord joining its two neighbours.
/// Non-negative (up to rounding) iff every vertex is an extreme point.
pub fn min_vertex_excess(points: &[(f64, f64)]) -> f64 {
    let n = points.len();
    if n < 3 {
        return f64::INFINITY;
    }
    (0..n)
        .map(|i| {
            let (a, b, c) = (points[(i + n - 1) % n], points[i], points[(i + 1) % n]);
            let (dx, dy) = (c.0 - a.0, c.1 - a.1);
            let len = dx.hypot(dy);
            // Positive when b lies to the right of a→c, i.e. outside for a CCW polygon.
            ((b.0 - a.0) * dy - (b.1 - a.1) * dx) / len
        })
        .fold(f64::INFINITY, f64::min)
}
