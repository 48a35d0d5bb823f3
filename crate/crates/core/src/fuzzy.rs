//! Zadeh fuzzy arithmetic and the left-shoulder membership function.
//!
//! Conjunction is `min`, disjunction is `max`. Every cardinality restriction
//! in the memory is an "at least `k`" left shoulder whose ramp starts at
//! `k⁻ = k·(1 − a)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when two degrees are required to be equal.
pub const DEGREE_TOLERANCE: f64 = 1e-9;

/// A fuzzy degree of truth in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value))
        } else {
            Err(Error::InvalidDegree(value))
        }
    }

    /// Clamps into `[0, 1]`; NaN maps to zero.
    pub fn saturating(value: f64) -> Self {
        if value.is_nan() {
            Degree::ZERO
        } else {
            Degree(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Zadeh conjunction.
    #[inline]
    pub fn tnorm(self, other: Degree) -> Degree {
        Degree(self.0.min(other.0))
    }

    /// Zadeh disjunction.
    #[inline]
    pub fn tconorm(self, other: Degree) -> Degree {
        Degree(self.0.max(other.0))
    }

    pub fn approx_eq(self, other: Degree) -> bool {
        (self.0 - other.0).abs() <= DEGREE_TOLERANCE
    }
}

impl TryFrom<f64> for Degree {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Degree::new(value)
    }
}

impl From<Degree> for f64 {
    fn from(d: Degree) -> f64 {
        d.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn tnorm(x: Degree, y: Degree) -> Degree {
    x.tnorm(y)
}

pub fn tconorm(x: Degree, y: Degree) -> Degree {
    x.tconorm(y)
}

/// An "at least `k`" fuzzy cardinality restriction with fuzziness `a`.
///
/// Immutable once built: a learned restriction never changes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawShoulder", into = "RawShoulder")]
pub struct LeftShoulder {
    k: f64,
    a: f64,
}

#[derive(Serialize, Deserialize)]
struct RawShoulder {
    k: f64,
    a: f64,
}

impl TryFrom<RawShoulder> for LeftShoulder {
    type Error = Error;

    fn try_from(raw: RawShoulder) -> Result<Self> {
        LeftShoulder::new(raw.k, raw.a)
    }
}

impl From<LeftShoulder> for RawShoulder {
    fn from(s: LeftShoulder) -> Self {
        RawShoulder { k: s.k, a: s.a }
    }
}

impl LeftShoulder {
    pub fn new(k: f64, a: f64) -> Result<Self> {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::InvalidCardinality(k));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidFuzziness(a));
        }
        Ok(LeftShoulder { k, a })
    }

    #[inline]
    pub fn k(&self) -> f64 {
        self.k
    }

    #[inline]
    pub fn fuzziness(&self) -> f64 {
        self.a
    }

    /// Start of the ramp, `k·(1 − a)`.
    #[inline]
    pub fn k_minus(&self) -> f64 {
        self.k * (1.0 - self.a)
    }

    /// Degree to which cardinality `c` satisfies "at least `k`".
    pub fn membership(&self, c: f64) -> Result<Degree> {
        if c.is_nan() || c < 0.0 {
            return Err(Error::InvalidCardinality(c));
        }
        Ok(self.eval(c))
    }

    // `c` already known to be a valid cardinality.
    pub(crate) fn eval(&self, c: f64) -> Degree {
        let lo = self.k_minus();
        if c >= self.k {
            Degree::ONE
        } else if c <= lo {
            Degree::ZERO
        } else {
            // k > c > lo, so the denominator is positive.
            Degree::saturating((c - lo) / (self.k - lo))
        }
    }
}

impl fmt::Display for LeftShoulder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "≥{} (a={})", self.k, self.a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: f64) -> Degree {
        Degree::new(v).unwrap()
    }

    #[test]
    fn zadeh_operators() {
        assert_eq!(tnorm(d(0.6), d(0.9)), d(0.6));
        assert_eq!(tnorm(Degree::ONE, d(0.37)), d(0.37));
        assert_eq!(tnorm(d(0.3), d(0.3)), d(0.3));
        assert_eq!(tconorm(d(0.6), d(0.1)), d(0.6));
        assert_eq!(tconorm(Degree::ZERO, d(0.37)), d(0.37));
        assert_eq!(tconorm(d(0.5), d(0.5)), d(0.5));
    }

    #[test]
    fn degree_rejects_out_of_range() {
        assert!(Degree::new(1.0000001).is_err());
        assert!(Degree::new(-0.1).is_err());
        assert!(Degree::new(f64::NAN).is_err());
        assert!(serde_json::from_str::<Degree>("1.5").is_err());
    }

    #[test]
    fn shoulder_cases() {
        let s = LeftShoulder::new(1.0, 0.5).unwrap();
        assert_eq!(s.membership(1.2).unwrap(), Degree::ONE);
        assert_eq!(s.membership(0.4).unwrap(), Degree::ZERO);
        assert!((s.membership(0.75).unwrap().value() - 0.5).abs() < 1e-9);
        assert!(s.membership(-0.01).is_err());
    }

    #[test]
    fn shoulder_k_minus() {
        assert_eq!(LeftShoulder::new(2.0, 0.0).unwrap().k_minus(), 2.0);
        assert_eq!(LeftShoulder::new(2.0, 1.0).unwrap().k_minus(), 0.0);
        assert!((LeftShoulder::new(2.0, 0.4).unwrap().k_minus() - 1.2).abs() < 1e-12);
        assert!(LeftShoulder::new(1.0, 1.5).is_err());
        assert!(LeftShoulder::new(-1.0, 0.5).is_err());
    }

    #[test]
    fn degenerate_shoulders() {
        let crisp = LeftShoulder::new(1.0, 0.0).unwrap();
        assert_eq!(crisp.membership(1.0).unwrap(), Degree::ONE);
        assert_eq!(crisp.membership(0.999).unwrap(), Degree::ZERO);

        let empty = LeftShoulder::new(0.0, 0.4).unwrap();
        assert_eq!(empty.membership(0.0).unwrap(), Degree::ONE);
        assert_eq!(empty.membership(3.0).unwrap(), Degree::ONE);

        // a = 1: ramp from zero.
        let loose = LeftShoulder::new(2.0, 1.0).unwrap();
        assert_eq!(loose.membership(0.0).unwrap(), Degree::ZERO);
        assert!((loose.membership(0.5).unwrap().value() - 0.25).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn membership_monotone_in_c(k in 0.0..10.0f64, a in 0.0..=1.0f64, c1 in 0.0..12.0f64, c2 in 0.0..12.0f64) {
            let s = LeftShoulder::new(k, a).unwrap();
            let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
            prop_assert!(s.membership(lo).unwrap() <= s.membership(hi).unwrap());
        }

        #[test]
        fn weaker_restriction_dominates(k in 0.0..10.0f64, shrink in 0.0..=1.0f64, a in 0.0..=1.0f64, c in 0.0..12.0f64) {
            let strong = LeftShoulder::new(k, a).unwrap();
            let weak = LeftShoulder::new(k * shrink, a).unwrap();
            prop_assert!(weak.membership(c).unwrap() >= strong.membership(c).unwrap());
        }

        #[test]
        fn zadeh_laws(x in 0.0..=1.0f64, y in 0.0..=1.0f64, z in 0.0..=1.0f64) {
            let (x, y, z) = (d(x), d(y), d(z));
            prop_assert_eq!(tnorm(x, y), tnorm(y, x));
            prop_assert_eq!(tconorm(x, y), tconorm(y, x));
            prop_assert_eq!(tnorm(tnorm(x, y), z), tnorm(x, tnorm(y, z)));
            prop_assert_eq!(tconorm(tconorm(x, y), z), tconorm(x, tconorm(y, z)));
            if x <= y {
                prop_assert!(tnorm(x, z) <= tnorm(y, z));
                prop_assert!(tconorm(x, z) <= tconorm(y, z));
            }
        }

        #[test]
        fn membership_in_unit_interval(k in 0.0..10.0f64, a in 0.0..=1.0f64, c in 0.0..12.0f64) {
            let m = LeftShoulder::new(k, a).unwrap().membership(c).unwrap().value();
            prop_assert!((0.0..=1.0).contains(&m));
        }
    }
}
