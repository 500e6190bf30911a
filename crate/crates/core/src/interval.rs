//! Outward-rounded interval arithmetic on `f64`.
//!
//! No rounding modes are touched: every operation is evaluated in
//! round-to-nearest and the endpoints are then pushed one ulp outward,
//! which over-approximates the exact result.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "[{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    /// `v` widened by `rel·|v|` on both sides.
    pub fn around(v: f64, rel: f64) -> Self {
        let r = (v.abs() * rel).next_up();
        Interval {
            lo: (v - r).next_down(),
            hi: (v + r).next_up(),
        }
    }

    fn outward(lo: f64, hi: f64) -> Self {
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Pointwise maximum: encloses `max(x, y)` for `x ∈ self`, `y ∈ other`.
    pub fn max(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn min(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Encloses `v · 2^exp` for an arbitrary-precision `v`.
    pub fn from_scaled_big(v: &BigInt, exp: i32) -> Interval {
        if v.is_zero() {
            return Interval::point(0.0);
        }
        let bits = v.bits();
        let (top, shift) = if bits > 62 {
            let shift = bits - 62;
            (
                (v.abs() >> shift).to_f64().expect("62-bit value"),
                shift as i64,
            )
        } else {
            (v.abs().to_f64().expect("62-bit value"), 0)
        };
        // |v| lies in [top, top + 1]·2^shift (exact bounds only when shift = 0).
        let mag = if shift == 0 {
            Interval::outward(top, top)
        } else {
            Interval::outward(top, top + 1.0)
        };
        let scaled = mag * Interval::point(pow2(shift + i64::from(exp)));
        if v.is_negative() {
            -scaled
        } else {
            scaled
        }
    }
}

/// `2^e` as an `f64`, exact wherever representable; saturates to 0 or ∞.
pub fn pow2(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e >= -1074 {
        f64::from_bits(1u64 << (e + 1074))
    } else {
        0.0
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::outward(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::outward(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::outward(lo, hi)
    }
}

impl Div for Interval {
    type Output = Interval;
    /// Division by an interval that excludes zero.
    fn div(self, o: Interval) -> Interval {
        assert!(
            o.lo > 0.0 || o.hi < 0.0,
            "division by an interval containing zero"
        );
        let c = [
            self.lo / o.lo,
            self.lo / o.hi,
            self.hi / o.lo,
            self.hi / o.hi,
        ];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::outward(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_matches_powi_in_normal_range() {
        for e in -1000..1000 {
            assert_eq!(pow2(e), 2f64.powi(e as i32));
        }
        assert_eq!(pow2(-1074), f64::from_bits(1));
        assert_eq!(pow2(-1075), 0.0);
        assert_eq!(pow2(1024), f64::INFINITY);
    }

    #[test]
    fn arithmetic_encloses_exact_results() {
        let third = Interval::point(1.0) / Interval::point(3.0);
        assert!(third.lo < third.hi);
        let back = third * Interval::point(3.0);
        assert!(back.contains(1.0));
        let d = Interval::point(0.1) + Interval::point(0.2) - Interval::point(0.3);
        assert!(d.contains(0.0) || d.lo.abs() < 1e-16);
    }

    #[test]
    fn big_conversion_encloses_value() {
        let v: BigInt = "123456789012345678901234567890123".parse().unwrap();
        let i = Interval::from_scaled_big(&v, -10);
        let approx = 123456789012345678901234567890123f64 / 1024.0;
        assert!(i.contains(approx));
        assert!(i.width() / approx < 1e-15);
        let n = Interval::from_scaled_big(&-v, 0);
        assert!(n.hi < 0.0);
        let small = Interval::from_scaled_big(&BigInt::from(7), 1);
        assert!(small.contains(14.0) && small.width() < 1e-14);
    }
}
