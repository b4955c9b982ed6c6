//! Elementary-function enclosures.
//!
//! `exp`, `ln`, `sin`, `cos`, `tan` and `powf` come from the platform libm,
//! which is faithful but not directed, so each endpoint is pushed outward by
//! [`ELEM_ULPS`]. Points where the value is known exactly (`exp(0)`, `ln(1)`,
//! `sin(0)`, `cos(0)`, `x^0`, `1^q`) are not inflated.

use super::round::{self, inflate_down, inflate_up};
use super::{Fault, Interval, IntervalError, PI_HI, PI_LO};

/// Outward inflation, in ulps, applied to every libm endpoint value.
pub const ELEM_ULPS: u32 = 2;

fn dn(x: f64) -> f64 {
    inflate_down(x, ELEM_ULPS)
}

fn up(x: f64) -> f64 {
    inflate_up(x, ELEM_ULPS)
}

fn exp_down(x: f64) -> f64 {
    match x {
        0.0 => 1.0,
        f64::NEG_INFINITY => 0.0,
        _ => {
            let e = x.exp();
            if e.is_infinite() {
                f64::MAX
            } else {
                dn(e).max(0.0)
            }
        }
    }
}

fn exp_up(x: f64) -> f64 {
    match x {
        0.0 => 1.0,
        f64::INFINITY => f64::INFINITY,
        _ => {
            let e = x.exp();
            if e == 0.0 {
                f64::from_bits(1)
            } else {
                up(e)
            }
        }
    }
}

fn ln_down(x: f64) -> f64 {
    if x == 1.0 {
        0.0
    } else if x == 0.0 {
        f64::NEG_INFINITY
    } else if x.is_infinite() {
        f64::MAX
    } else {
        dn(x.ln())
    }
}

fn ln_up(x: f64) -> f64 {
    if x == 1.0 {
        0.0
    } else if x.is_infinite() {
        f64::INFINITY
    } else if x == 0.0 {
        -f64::MAX
    } else {
        up(x.ln())
    }
}

/// Critical points of sin/cos are `(j + offset) * pi` with value `(-1)^j`.
/// Returns the hull of the values at every critical point that may lie in
/// `[lo, hi]`, given as `(may_reach_minus_one, may_reach_one)`.
fn critical_hits(lo: f64, hi: f64, offset: f64) -> (bool, bool) {
    let j_min = (lo / PI_HI).floor() - 2.0;
    let j_max = (hi / PI_LO).ceil() + 1.0;
    let mut hit = (false, false);
    let mut j = j_min;
    while j <= j_max {
        let k = Interval::point(j + offset) * Interval::pi();
        if k.hi() >= lo && k.lo() <= hi {
            if (j as i64).rem_euclid(2) == 0 {
                hit.1 = true;
            } else {
                hit.0 = true;
            }
        }
        j += 1.0;
    }
    hit
}

fn trig(a: Interval, offset: f64, f: fn(f64) -> f64, exact_at_zero: f64) -> Interval {
    if a.fault().is_some() {
        return a;
    }
    let full = Interval::raw(-1.0, 1.0);
    if a.is_unbounded() || a.width() >= 2.0 * PI_LO {
        return full;
    }
    let val = |x: f64| -> (f64, f64) {
        if x == 0.0 {
            (exact_at_zero, exact_at_zero)
        } else {
            let v = f(x);
            (dn(v).max(-1.0), up(v).min(1.0))
        }
    };
    let (l0, h0) = val(a.lo());
    let (l1, h1) = val(a.hi());
    let (mut lo, mut hi) = (l0.min(l1), h0.max(h1));
    let (minus, plus) = critical_hits(a.lo(), a.hi(), offset);
    if minus {
        lo = -1.0;
    }
    if plus {
        hi = 1.0;
    }
    Interval::raw(lo, hi)
}

impl Interval {
    pub fn exp(self) -> Interval {
        if self.fault().is_some() {
            return self;
        }
        Interval::raw(exp_down(self.lo()), exp_up(self.hi()))
    }

    /// Natural logarithm. A lower endpoint of exactly zero gives `-inf`
    /// (the one-sided limit); negative arguments are a domain fault.
    pub fn ln(self) -> Interval {
        if self.fault().is_some() {
            return self;
        }
        if self.lo() < 0.0 || self.hi() <= 0.0 {
            return Interval::faulted(Fault::Domain);
        }
        Interval::raw(ln_down(self.lo()), ln_up(self.hi()))
    }

    pub fn sqrt(self) -> Interval {
        if self.fault().is_some() {
            return self;
        }
        if self.lo() < 0.0 {
            return Interval::faulted(Fault::Domain);
        }
        Interval::raw(round::sqrt_down(self.lo()), round::sqrt_up(self.hi()))
    }

    pub fn cos(self) -> Interval {
        trig(self, 0.0, f64::cos, 1.0)
    }

    pub fn sin(self) -> Interval {
        trig(self, 0.5, f64::sin, 0.0)
    }

    /// Tangent; a possible pole inside the interval is a domain fault.
    pub fn tan(self) -> Interval {
        if self.fault().is_some() {
            return self;
        }
        if self.is_unbounded() || self.width() >= PI_LO {
            return Interval::faulted(Fault::Domain);
        }
        let j_min = (self.lo() / PI_HI).floor() - 2.0;
        let j_max = (self.hi() / PI_LO).ceil() + 1.0;
        let mut j = j_min;
        while j <= j_max {
            let pole = Interval::point(j + 0.5) * Interval::pi();
            if pole.hi() >= self.lo() && pole.lo() <= self.hi() {
                return Interval::faulted(Fault::Domain);
            }
            j += 1.0;
        }
        let t = |x: f64, down: bool| {
            if x == 0.0 {
                0.0
            } else if down {
                dn(x.tan())
            } else {
                up(x.tan())
            }
        };
        Interval::raw(t(self.lo(), true), t(self.hi(), false))
    }

    pub fn csc(self) -> Interval {
        self.sin().recip()
    }

    pub fn sec(self) -> Interval {
        self.cos().recip()
    }

    pub fn cot(self) -> Interval {
        self.cos() / self.sin()
    }

    /// `x^q` for `x >= 0`. `0^q = 0` for `q > 0`; `x^0 = 1`.
    pub fn pow(self, q: Interval) -> Interval {
        if let Some(f) = self.fault().or(q.fault()) {
            return Interval::faulted(f);
        }
        if self.lo() < 0.0 || (self.lo() == 0.0 && q.lo() < 0.0) {
            return Interval::faulted(Fault::Domain);
        }
        if q.is_thin() {
            let e = q.lo();
            if e == 1.0 {
                return self;
            }
            if e == 2.0 {
                return self.sqr();
            }
            if e == 0.5 {
                return self.sqrt();
            }
        }
        let corner = |x: f64, e: f64, down: bool| -> f64 {
            if x == 1.0 || e == 0.0 {
                return 1.0;
            }
            if x == 0.0 {
                return 0.0;
            }
            if x.is_infinite() {
                return if e > 0.0 { f64::INFINITY } else { 0.0 };
            }
            if e.is_infinite() {
                return match (x > 1.0, e > 0.0) {
                    (true, true) | (false, false) => f64::INFINITY,
                    _ => 0.0,
                };
            }
            let v = x.powf(e);
            if down {
                if v.is_infinite() {
                    f64::MAX
                } else {
                    dn(v).max(0.0)
                }
            } else if v == 0.0 {
                f64::from_bits(1)
            } else {
                up(v)
            }
        };
        let xs = [self.lo(), self.hi()];
        let es = [q.lo(), q.hi()];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &x in &xs {
            for &e in &es {
                lo = lo.min(corner(x, e, true));
                hi = hi.max(corner(x, e, false));
            }
        }
        // clamps that hold exactly and keep products with 1 - x^q signed
        if q.lo() >= 0.0 && self.hi() <= 1.0 {
            hi = hi.min(1.0);
        }
        if q.lo() >= 0.0 && self.lo() >= 1.0 {
            lo = lo.max(1.0);
        }
        if q.hi() <= 0.0 && self.hi() <= 1.0 {
            lo = lo.max(1.0);
        }
        Interval::raw(lo, hi)
    }

    pub fn powf(self, q: f64) -> Interval {
        self.pow(Interval::point(q))
    }

    /// Divided difference `f[x, ..., x, 1]` (the node `x` repeated `k`
    /// times) of `f(t) = t^q`, for `x` in `[0, 1]` and `k >= 1`.
    ///
    /// For `k = 1` this is `(1 - x^q) / (1 - x)`, continued to the value
    /// `q` at `x = 1`. The enclosure intersects two forms: the mean-value
    /// form `binom(q, k) * xi^(q - k)` with `xi` in `[x, 1]`, valid
    /// everywhere, and the direct quotient recursion, valid when `x < 1`.
    /// The derivative with respect to `x` of this divided difference is
    /// `k` times the one with `k + 1` repeated nodes.
    pub fn pow_dd(self, q: Interval, k: u32) -> Interval {
        if let Some(f) = self.fault().or(q.fault()) {
            return Interval::faulted(f);
        }
        if k == 0 || self.lo() < 0.0 || self.hi() > 1.0 {
            return Interval::faulted(Fault::Domain);
        }
        let xi = Interval::raw(self.lo(), 1.0);
        let mut binom = Interval::point(1.0);
        for j in 0..k {
            binom = binom * (q - Interval::point(j as f64)) / Interval::point((j + 1) as f64);
        }
        let mvf = binom * xi.pow(q - Interval::point(k as f64));
        let direct = if self.hi() < 1.0 { Some(pow_dd_direct(self, q, k)) } else { None };
        match (mvf.is_valid(), direct) {
            (true, Some(d)) if d.is_valid() => mvf.intersect(&d).unwrap_or(mvf),
            (false, Some(d)) => d,
            _ => mvf,
        }
    }

    pub fn checked_ln(self) -> Result<Interval, IntervalError> {
        if self.hi() <= 0.0 || self.lo() < 0.0 {
            return Err(IntervalError::DomainError("log of a nonpositive interval"));
        }
        self.ln().check()
    }

    pub fn checked_sqrt(self) -> Result<Interval, IntervalError> {
        if self.lo() < 0.0 {
            return Err(IntervalError::DomainError("sqrt of a negative interval"));
        }
        self.sqrt().check()
    }

    pub fn checked_tan(self) -> Result<Interval, IntervalError> {
        let t = self.tan();
        if t.fault() == Some(Fault::Domain) {
            return Err(IntervalError::DomainError("tan across a pole"));
        }
        t.check()
    }

    pub fn checked_pow(self, q: Interval) -> Result<Interval, IntervalError> {
        if self.lo() < 0.0 {
            return Err(IntervalError::DomainError("power of a negative base"));
        }
        if self.lo() == 0.0 && q.lo() < 0.0 {
            return Err(IntervalError::DomainError("negative power of an interval containing 0"));
        }
        self.pow(q).check()
    }
}

/// `f[x^(k), 1] = (f[x^(k-1), 1] - f^(k-1)(x) / (k-1)!) / (1 - x)`.
fn pow_dd_direct(x: Interval, q: Interval, k: u32) -> Interval {
    let one = Interval::point(1.0);
    let h = one - x;
    let mut dd = one - x.pow(q);
    for j in 1..k {
        // binom(q, j) x^(q - j)
        let mut taylor = Interval::point(1.0);
        for i in 0..j {
            taylor = taylor * (q - Interval::point(i as f64)) / Interval::point((i + 1) as f64);
        }
        taylor = taylor * x.pow(q - Interval::point(j as f64));
        dd = dd / h - taylor;
    }
    dd / h
}
