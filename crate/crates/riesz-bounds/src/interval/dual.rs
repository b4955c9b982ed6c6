use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Interval, Scalar};

/// Forward-mode dual number `v + d·ε` over any [`Scalar`].
///
/// `Dual<Interval>` gives enclosures of first derivatives; nesting
/// (`Dual<Dual<Interval>>`) gives second and mixed derivatives. Terms whose
/// derivative part is exactly zero are skipped, so differentiating with
/// respect to `t` never evaluates `r^(p/2 - 1)` at `r = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual<T> {
    pub v: T,
    pub d: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(v: T, d: T) -> Self {
        Dual { v, d }
    }

    pub fn constant(v: T) -> Self {
        Dual { v, d: T::cst(0.0) }
    }

    /// The independent variable: derivative one.
    pub fn var(v: T) -> Self {
        Dual { v, d: T::cst(1.0) }
    }

    /// `d * k`, skipping the product when `d` is exactly zero.
    fn scale(d: T, k: impl FnOnce() -> T) -> T {
        if d.is_exact_zero() {
            d
        } else {
            d * k()
        }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = match (self.d.is_exact_zero(), o.d.is_exact_zero()) {
            (true, _) => o.d,
            (_, true) => self.d,
            _ => self.d + o.d,
        };
        Dual { v: self.v + o.v, d }
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = match (self.d.is_exact_zero(), o.d.is_exact_zero()) {
            (true, true) => self.d,
            (true, false) => -o.d,
            (false, true) => self.d,
            _ => self.d - o.d,
        };
        Dual { v: self.v - o.v, d }
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual { v: -self.v, d: -self.d }
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = match (self.d.is_exact_zero(), o.d.is_exact_zero()) {
            (true, true) => self.d,
            (true, false) => self.v * o.d,
            (false, true) => self.d * o.v,
            _ => self.d * o.v + self.v * o.d,
        };
        Dual { v: self.v * o.v, d }
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let q = self.v / o.v;
        let d = match (self.d.is_exact_zero(), o.d.is_exact_zero()) {
            (true, true) => self.d,
            (false, true) => self.d / o.v,
            (true, false) => -(q * o.d) / o.v,
            _ => (self.d - q * o.d) / o.v,
        };
        Dual { v: q, d }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn cst(x: f64) -> Self {
        Dual::constant(T::cst(x))
    }
    fn ratio(n: i64, d: i64) -> Self {
        Dual::constant(T::ratio(n, d))
    }
    fn pi() -> Self {
        Dual::constant(T::pi())
    }
    fn exp(self) -> Self {
        let e = self.v.exp();
        Dual { v: e, d: Self::scale(self.d, || e) }
    }
    fn ln(self) -> Self {
        let v = self.v;
        Dual { v: v.ln(), d: if self.d.is_exact_zero() { self.d } else { self.d / v } }
    }
    fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        Dual { v: r, d: if self.d.is_exact_zero() { self.d } else { self.d / (r + r) } }
    }
    fn sin(self) -> Self {
        let v = self.v;
        Dual { v: v.sin(), d: Self::scale(self.d, || v.cos()) }
    }
    fn cos(self) -> Self {
        let v = self.v;
        Dual { v: v.cos(), d: Self::scale(self.d, || -v.sin()) }
    }
    fn tan(self) -> Self {
        let t = self.v.tan();
        Dual { v: t, d: Self::scale(self.d, || T::cst(1.0) + t.sqr()) }
    }
    fn pow(self, q: Self) -> Self {
        let x = self.v;
        let val = x.pow(q.v);
        let mut d = Self::scale(self.d, || q.v * x.pow(q.v - T::cst(1.0)));
        if !q.d.is_exact_zero() {
            let dq = q.d * val * x.ln();
            d = if d.is_exact_zero() { dq } else { d + dq };
        }
        Dual { v: val, d }
    }
    fn powi(self, n: i32) -> Self {
        let x = self.v;
        Dual { v: x.powi(n), d: Self::scale(self.d, || T::cst(n as f64) * x.powi(n - 1)) }
    }
    fn sqr(self) -> Self {
        let x = self.v;
        Dual { v: x.sqr(), d: Self::scale(self.d, || x + x) }
    }
    fn pow_dd(self, q: Self, k: u32) -> Self {
        let x = self.v;
        let mut d = Self::scale(self.d, || T::cst(k as f64) * x.pow_dd(q.v, k + 1));
        if !q.d.is_exact_zero() {
            // derivative in the exponent is not provided
            d = T::cst(f64::NAN);
        }
        Dual { v: x.pow_dd(q.v, k), d }
    }
    fn enclosure(&self) -> Interval {
        self.v.enclosure()
    }
    fn is_exact_zero(&self) -> bool {
        self.v.is_exact_zero() && self.d.is_exact_zero()
    }
}

/// First derivative of a one-variable function at `x`.
pub fn derivative<T: Scalar>(f: impl Fn(Dual<T>) -> Dual<T>, x: T) -> T {
    f(Dual::var(x)).d
}
