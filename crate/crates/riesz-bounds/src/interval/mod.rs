//! Closed real intervals with outward rounding.
//!
//! An [`Interval`] always satisfies `lo <= hi`. Operations that leave the
//! domain of a function (division by an interval containing zero, `ln` of a
//! negative number, a NaN input) do not panic. They return an interval
//! carrying a [`Fault`], and every later result computed from it carries
//! the fault too. The checked methods (`checked_div`, `checked_ln`, ...)
//! return the same information as a [`Result`].
//!
//! Infinite endpoints are allowed and reported by [`Interval::is_unbounded`].
//! They arise from limits such as `ln([0, 1]) = [-inf, 0]` and follow the
//! set-based convention `0 * inf = 0`.
//!
//! ```
//! use riesz_bounds::interval::Interval;
//!
//! let third = Interval::point(1.0) / Interval::point(3.0);
//! assert!(third.lo() < third.hi());
//! assert!(third.contains(1.0 / 3.0));
//!
//! let bad = Interval::point(1.0) / Interval::new(-1.0, 1.0).unwrap();
//! assert!(!bad.is_valid());
//! assert!(!(bad + Interval::point(2.0)).is_valid());
//! ```

mod boxes;
mod dual;
mod elem;
pub mod round;
mod scalar;

pub use boxes::IBox;
pub use dual::{derivative, Dual};
pub use elem::ELEM_ULPS;
pub use scalar::Scalar;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Why an interval result is not a valid enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    DivisionByZero,
    Domain,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("invalid interval (NaN endpoint or lo > hi)")]
    InvalidInterval,
    #[error("domain error: {0}")]
    DomainError(&'static str),
}

impl From<Fault> for IntervalError {
    fn from(f: Fault) -> Self {
        match f {
            Fault::DivisionByZero => IntervalError::DivisionByZeroInterval,
            Fault::Domain => IntervalError::DomainError("argument outside the function domain"),
            Fault::Invalid => IntervalError::InvalidInterval,
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
    fault: Option<Fault>,
}

/// Lower bound of pi (the nearest double lies below pi).
pub const PI_LO: f64 = std::f64::consts::PI;
/// Upper bound of pi.
pub const PI_HI: f64 = 3.141_592_653_589_793_6;

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(IntervalError::InvalidInterval);
        }
        Ok(Interval { lo, hi, fault: None })
    }

    /// A degenerate interval. NaN gives an invalid interval.
    pub fn point(x: f64) -> Self {
        if x.is_nan() {
            Self::faulted(Fault::Invalid)
        } else {
            Interval { lo: x, hi: x, fault: None }
        }
    }

    pub fn faulted(f: Fault) -> Self {
        Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY, fault: Some(f) }
    }

    pub fn entire() -> Self {
        Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY, fault: None }
    }

    /// Builds an interval from endpoints that are already known to be ordered
    /// bounds; a NaN endpoint turns into an invalid interval.
    pub(crate) fn raw(lo: f64, hi: f64) -> Self {
        if lo.is_nan() || hi.is_nan() {
            Self::faulted(Fault::Invalid)
        } else {
            debug_assert!(lo <= hi, "raw interval [{lo}, {hi}]");
            Interval { lo, hi, fault: None }
        }
    }

    /// Enclosure of the rational `n / d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Interval::point(n as f64) / Interval::point(d as f64)
    }

    pub fn pi() -> Self {
        Interval { lo: PI_LO, hi: PI_HI, fault: None }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    pub fn is_valid(&self) -> bool {
        self.fault.is_none()
    }

    pub fn is_unbounded(&self) -> bool {
        self.lo.is_infinite() || self.hi.is_infinite()
    }

    pub fn is_thin(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_exact_zero(&self) -> bool {
        self.fault.is_none() && self.lo == 0.0 && self.hi == 0.0
    }

    /// Converts a faulted interval into the matching error.
    pub fn check(self) -> Result<Self, IntervalError> {
        match self.fault {
            None => Ok(self),
            Some(f) => Err(f.into()),
        }
    }

    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            return self.lo;
        }
        match (self.lo.is_finite(), self.hi.is_finite()) {
            (true, true) => {
                let m = self.lo + 0.5 * (self.hi - self.lo);
                if m.is_finite() {
                    m
                } else {
                    0.5 * self.lo + 0.5 * self.hi
                }
            }
            (false, true) => {
                if self.hi > 0.0 {
                    0.0
                } else {
                    -f64::MAX
                }
            }
            (true, false) => {
                if self.lo < 0.0 {
                    0.0
                } else {
                    f64::MAX
                }
            }
            (false, false) => 0.0,
        }
    }

    pub fn width(&self) -> f64 {
        round::sub_up(self.hi, self.lo)
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, x: f64) -> bool {
        self.fault.is_none() && self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        self.fault.is_none() && other.fault.is_none() && other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let fault = self.fault.or(other.fault);
        if let Some(f) = fault {
            return Self::faulted(f);
        }
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi), fault: None }
    }

    /// Intersection, or `None` when disjoint or when either side is faulted.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        if self.fault.is_some() || other.fault.is_some() {
            return None;
        }
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi, fault: None })
    }

    /// Splits at the midpoint; the halves share the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval { hi: m, ..*self }, Interval { lo: m, ..*self })
    }

    fn poisoned(a: &Interval, b: &Interval) -> Option<Interval> {
        a.fault.or(b.fault).map(Self::faulted)
    }

    pub fn checked_add(self, rhs: Interval) -> Result<Interval, IntervalError> {
        (self + rhs).check()
    }

    pub fn checked_sub(self, rhs: Interval) -> Result<Interval, IntervalError> {
        (self - rhs).check()
    }

    pub fn checked_mul(self, rhs: Interval) -> Result<Interval, IntervalError> {
        (self * rhs).check()
    }

    pub fn checked_div(self, rhs: Interval) -> Result<Interval, IntervalError> {
        (self / rhs).check()
    }

    pub fn recip(self) -> Interval {
        Interval::point(1.0) / self
    }

    /// `x * x`, tighter than the product when the interval contains zero.
    pub fn sqr(self) -> Interval {
        if self.fault.is_some() {
            return self;
        }
        if self.lo >= 0.0 {
            Interval::raw(round::mul_down(self.lo, self.lo), round::mul_up(self.hi, self.hi))
        } else if self.hi <= 0.0 {
            Interval::raw(round::mul_down(self.hi, self.hi), round::mul_up(self.lo, self.lo))
        } else {
            let m = self.mag();
            Interval::raw(0.0, round::mul_up(m, m))
        }
    }

    /// Integer power with exact handling of the even/odd branches.
    pub fn powi(self, n: i32) -> Interval {
        if self.fault.is_some() {
            return self;
        }
        if n < 0 {
            return self.powi(-n).recip();
        }
        if n == 0 {
            return Interval::point(1.0);
        }
        let n = n as u32;
        let pow_down = |m: f64| (1..n).fold(m, |acc, _| round::mul_down(acc, m));
        let pow_up = |m: f64| (1..n).fold(m, |acc, _| round::mul_up(acc, m));
        // signed odd power of one endpoint, rounded in direction `down`
        let odd = |x: f64, down: bool| match (x >= 0.0, down) {
            (true, true) => pow_down(x),
            (true, false) => pow_up(x),
            (false, true) => -pow_up(-x),
            (false, false) => -pow_down(-x),
        };
        if n % 2 == 1 {
            return Interval::raw(odd(self.lo, true), odd(self.hi, false));
        }
        if self.lo >= 0.0 {
            Interval::raw(pow_down(self.lo), pow_up(self.hi))
        } else if self.hi <= 0.0 {
            Interval::raw(pow_down(-self.hi), pow_up(-self.lo))
        } else {
            Interval::raw(0.0, pow_up(self.mag()))
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Interval::point(0.0)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fault {
            Some(fault) => write!(f, "Interval({fault:?})"),
            None => write!(f, "[{:e}, {:e}]", self.lo, self.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        if let Some(p) = Interval::poisoned(&self, &rhs) {
            return p;
        }
        Interval::raw(round::add_down(self.lo, rhs.lo), round::add_up(self.hi, rhs.hi))
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        if let Some(p) = Interval::poisoned(&self, &rhs) {
            return p;
        }
        Interval::raw(round::sub_down(self.lo, rhs.hi), round::sub_up(self.hi, rhs.lo))
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo, fault: self.fault }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        if let Some(p) = Interval::poisoned(&self, &rhs) {
            return p;
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = round::mul_down(a, c)
            .min(round::mul_down(a, d))
            .min(round::mul_down(b, c))
            .min(round::mul_down(b, d));
        let hi = round::mul_up(a, c)
            .max(round::mul_up(a, d))
            .max(round::mul_up(b, c))
            .max(round::mul_up(b, d));
        Interval::raw(lo, hi)
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        if let Some(p) = Interval::poisoned(&self, &rhs) {
            return p;
        }
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Interval::faulted(Fault::DivisionByZero);
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = round::div_down(a, c)
            .min(round::div_down(a, d))
            .min(round::div_down(b, c))
            .min(round::div_down(b, d));
        let hi = round::div_up(a, c)
            .max(round::div_up(a, d))
            .max(round::div_up(b, c))
            .max(round::div_up(b, d));
        Interval::raw(lo, hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.fault {
            // JSON has no infinities; unbounded endpoints become null
            None => {
                let f = |x: f64| if x.is_finite() { Some(x) } else { None };
                [f(self.lo), f(self.hi)].serialize(s)
            }
            Some(fault) => format!("{fault:?}").serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [lo, hi]: [Option<f64>; 2] = Deserialize::deserialize(d)?;
        Interval::new(lo.unwrap_or(f64::NEG_INFINITY), hi.unwrap_or(f64::INFINITY))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn construction_rejects_reversed_and_nan() {
        assert_eq!(Interval::new(2.0, 1.0), Err(IntervalError::InvalidInterval));
        assert_eq!(Interval::new(f64::NAN, 1.0), Err(IntervalError::InvalidInterval));
        assert!(!Interval::point(f64::NAN).is_valid());
    }

    #[test]
    fn endpoint_arithmetic() {
        let s = iv(1.0, 2.0) + iv(3.0, 4.0);
        assert!(s.is_subset(&iv(4.0, 6.0)) && iv(4.0, 6.0).is_subset(&s));
        let p = iv(-1.0, 2.0) * iv(-3.0, 1.0);
        assert_eq!((p.lo(), p.hi()), (-6.0, 3.0));
        let q = Interval::point(1.0) / Interval::point(3.0);
        assert!(q.lo() < 1.0 / 3.0 || q.hi() > 1.0 / 3.0);
        assert!(q.lo() < q.hi());
    }

    #[test]
    fn division_by_zero_is_a_fault_that_poisons() {
        let z = iv(-1.0, 1.0);
        assert_eq!(iv(1.0, 2.0).checked_div(z), Err(IntervalError::DivisionByZeroInterval));
        let bad = iv(1.0, 2.0) / z;
        assert_eq!((bad * iv(0.0, 0.0)).fault(), Some(Fault::DivisionByZero));
    }

    #[test]
    fn structural_zero_stays_exact() {
        let one = Interval::point(1.0);
        assert!((one - one).is_exact_zero());
        assert!((iv(0.0, 0.0) * iv(-3.0, f64::INFINITY)).is_exact_zero());
    }

    #[test]
    fn sqr_and_powi() {
        let s = iv(-2.0, 1.0).sqr();
        assert_eq!((s.lo(), s.hi()), (0.0, 4.0));
        let c = iv(-2.0, 3.0).powi(3);
        assert_eq!((c.lo(), c.hi()), (-8.0, 27.0));
        let e = iv(-2.0, 1.0).powi(4);
        assert_eq!((e.lo(), e.hi()), (0.0, 16.0));
    }

    #[test]
    fn bisect_covers_parent() {
        let (a, b) = iv(0.0, 1.0).bisect();
        assert_eq!(a.lo(), 0.0);
        assert_eq!(a.hi(), b.lo());
        assert_eq!(b.hi(), 1.0);
    }

    #[test]
    fn json_round_trip() {
        let x = iv(-1.5, 2.0);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[-1.5,2.0]");
        let back: Interval = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let u = serde_json::to_string(&iv(0.0, f64::INFINITY)).unwrap();
        assert_eq!(u, "[0.0,null]");
    }
}
