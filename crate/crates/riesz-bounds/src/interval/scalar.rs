use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Interval;

/// The numeric contract every catalog function is written against.
///
/// Implemented by `f64` (fast probing), [`Interval`] (rigorous enclosures)
/// and [`Dual<T>`](super::Dual) (forward-mode derivatives, nestable for
/// higher orders).
pub trait Scalar:
    Copy
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn cst(x: f64) -> Self;
    /// The rational `n / d`, enclosed in interval modes.
    fn ratio(n: i64, d: i64) -> Self;
    fn pi() -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    /// `self^q` for a nonnegative base.
    fn pow(self, q: Self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn sqr(self) -> Self;
    /// Divided difference `f[x, ..., x, 1]` of `t^q` with `k` copies of `x`;
    /// see [`Interval::pow_dd`].
    fn pow_dd(self, q: Self, k: u32) -> Self;
    /// The value part as an interval (a point for `f64`).
    fn enclosure(&self) -> Interval;
    /// True when the value is known to be exactly zero.
    fn is_exact_zero(&self) -> bool;

    fn recip(self) -> Self {
        Self::cst(1.0) / self
    }

    fn csc(self) -> Self {
        self.sin().recip()
    }

    fn sec(self) -> Self {
        self.cos().recip()
    }

    fn cot(self) -> Self {
        self.cos() / self.sin()
    }

    fn powf(self, q: f64) -> Self {
        self.pow(Self::cst(q))
    }
}

impl Scalar for f64 {
    fn cst(x: f64) -> Self {
        x
    }
    fn ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn tan(self) -> Self {
        f64::tan(self)
    }
    fn pow(self, q: Self) -> Self {
        if self < 0.0 {
            return f64::NAN;
        }
        self.powf(q)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
    fn sqr(self) -> Self {
        self * self
    }
    fn pow_dd(self, q: Self, k: u32) -> Self {
        pow_dd_f64(self, q, k)
    }
    fn enclosure(&self) -> Interval {
        Interval::point(*self)
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

/// Floating evaluation of `f[x^(k), 1]` for `t^q`.
///
/// Near `x = 1` this sums the series
/// `(-1)^k * sum_{n >= k} binom(q, n) (-1)^n binom(n-1, k-1) h^(n-k)`
/// in `h = 1 - x`; further away it uses the quotient recursion.
fn pow_dd_f64(x: f64, q: f64, k: u32) -> f64 {
    if k == 0 || !(0.0..=1.0).contains(&x) {
        return f64::NAN;
    }
    let h = 1.0 - x;
    if h > 0.5 {
        let mut dd = 1.0 - x.powf(q);
        for j in 1..k {
            let mut b = 1.0;
            for i in 0..j {
                b *= (q - i as f64) / (i + 1) as f64;
            }
            dd = dd / h - b * x.powf(q - j as f64);
        }
        return dd / h;
    }
    let k = k as i64;
    // binom(q, n) for n = k, built incrementally
    let mut bq = 1.0;
    for i in 0..k {
        bq *= (q - i as f64) / (i + 1) as f64;
    }
    let mut bn = 1.0; // binom(n - 1, k - 1) at n = k
    let mut hp = 1.0;
    let mut sum = 0.0;
    let mut n = k;
    loop {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = bq * sign * bn * hp;
        sum += term;
        if n > k + 8 && term.abs() <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        if n > k + 400 {
            break;
        }
        bq *= (q - n as f64) / (n + 1) as f64;
        bn *= n as f64 / (n - k + 1) as f64;
        hp *= h;
        n += 1;
    }
    if k % 2 == 0 {
        sum
    } else {
        -sum
    }
}

impl Scalar for Interval {
    fn cst(x: f64) -> Self {
        Interval::point(x)
    }
    fn ratio(n: i64, d: i64) -> Self {
        Interval::ratio(n, d)
    }
    fn pi() -> Self {
        Interval::pi()
    }
    fn exp(self) -> Self {
        Interval::exp(self)
    }
    fn ln(self) -> Self {
        Interval::ln(self)
    }
    fn sqrt(self) -> Self {
        Interval::sqrt(self)
    }
    fn sin(self) -> Self {
        Interval::sin(self)
    }
    fn cos(self) -> Self {
        Interval::cos(self)
    }
    fn tan(self) -> Self {
        Interval::tan(self)
    }
    fn pow(self, q: Self) -> Self {
        Interval::pow(self, q)
    }
    fn powi(self, n: i32) -> Self {
        Interval::powi(self, n)
    }
    fn sqr(self) -> Self {
        Interval::sqr(self)
    }
    fn pow_dd(self, q: Self, k: u32) -> Self {
        Interval::pow_dd(self, q, k)
    }
    fn enclosure(&self) -> Interval {
        *self
    }
    fn is_exact_zero(&self) -> bool {
        Interval::is_exact_zero(self)
    }
}
