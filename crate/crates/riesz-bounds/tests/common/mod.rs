//! Point oracles for interval enclosures.
//!
//! The four operations and `sqrt` are checked exactly: the rounding error of
//! the floating result is recovered with an FMA or TwoSum residual, so the
//! test knows on which side of the rounded value the real result lies.
//! Elementary functions are checked against libm, whose error is below one
//! ulp, by requiring the enclosure to contain both neighbours of its value.
#![allow(dead_code)]

use rand::Rng;
use riesz_bounds::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Sqr,
    Powi,
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Pow,
}

pub const OPS: [Op; 13] =
    [Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Sqr, Op::Powi, Op::Sqrt, Op::Exp, Op::Ln, Op::Sin, Op::Cos, Op::Tan, Op::Pow];

/// Operands and a point inside each.
#[derive(Clone, Copy, Debug)]
pub struct Case {
    pub x: Interval,
    pub xp: f64,
    pub y: Interval,
    pub yp: f64,
    pub n: i32,
}

/// Range of interval endpoints for `op`'s first and second operand.
pub fn ranges(op: Op) -> ((f64, f64), (f64, f64)) {
    match op {
        Op::Add | Op::Sub | Op::Mul | Op::Sqr => ((-1e6, 1e6), (-1e6, 1e6)),
        // the divisor may straddle zero; the result is then unbounded
        Op::Div => ((-1e6, 1e6), (-1e3, 1e3)),
        Op::Powi => ((-30.0, 30.0), (0.0, 0.0)),
        Op::Sqrt | Op::Ln => ((0.0, 1e8), (0.0, 0.0)),
        Op::Exp => ((-700.0, 700.0), (0.0, 0.0)),
        Op::Sin | Op::Cos => ((-1e4, 1e4), (0.0, 0.0)),
        Op::Tan => ((-1.55, 1.55), (0.0, 0.0)),
        Op::Pow => ((1e-6, 100.0), (-6.0, 6.0)),
    }
}

/// An interval inside `range` from two uniforms and a point at fraction `t`.
/// Widths span many scales so thin and wide operands both occur.
pub fn operand(range: (f64, f64), a: f64, w: f64, t: f64) -> (Interval, f64) {
    let (lo0, hi0) = range;
    let lo = lo0 + a * (hi0 - lo0);
    let width = ((hi0 - lo0) * 10f64.powf(-12.0 * w)).min(hi0 - lo);
    let hi = (lo + width).min(hi0);
    let x = Interval::new(lo, hi).expect("ordered");
    let p = (lo + t * (hi - lo)).clamp(lo, hi);
    (x, p)
}

pub fn sample<R: Rng>(op: Op, rng: &mut R) -> Case {
    let (rx, ry) = ranges(op);
    let (x, xp) = operand(rx, rng.random(), rng.random(), rng.random());
    let (y, yp) = operand(ry, rng.random(), rng.random(), rng.random());
    Case { x, xp, y, yp, n: rng.random_range(-6..=6) }
}

/// `e = a + b - fl(a + b)` exactly.
pub fn two_sum(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

/// `a^n` as an unevaluated sum `hi + lo`, accurate far beyond one ulp of `hi`.
fn dd_powi(a: f64, n: u32) -> (f64, f64) {
    let (mut hi, mut lo) = (1.0f64, 0.0f64);
    for _ in 0..n {
        let p = hi * a;
        let e = hi.mul_add(a, -p) + lo * a;
        hi = p + e;
        lo = two_sum(p, e, hi);
    }
    (hi, lo)
}

/// Whether `enc` contains a real number equal to `r + e` with `e` given only
/// by its sign.
pub fn holds(enc: Interval, r: f64, e_sign: f64) -> bool {
    if !enc.is_valid() {
        return false;
    }
    if e_sign > 0.0 {
        enc.lo() <= r && enc.hi() > r
    } else if e_sign < 0.0 {
        enc.lo() < r && enc.hi() >= r
    } else {
        enc.contains(r)
    }
}

fn libm_holds(enc: Interval, v: f64) -> bool {
    enc.is_valid() && enc.lo() <= v.next_down() && v.next_up() <= enc.hi()
}

/// Checks one case; the error names the operands.
pub fn check(op: Op, c: &Case) -> Result<(), String> {
    let (x, y, a, b) = (c.x, c.y, c.xp, c.yp);
    let ok = match op {
        Op::Add => {
            let r = a + b;
            holds(x + y, r, two_sum(a, b, r))
        }
        Op::Sub => {
            let r = a - b;
            holds(x - y, r, two_sum(a, -b, r))
        }
        Op::Mul => {
            let r = a * b;
            holds(x * y, r, a.mul_add(b, -r))
        }
        Op::Sqr => {
            let r = a * a;
            holds(x.sqr(), r, a.mul_add(a, -r))
        }
        Op::Div => {
            let enc = x / y;
            if y.contains_zero() {
                // division by an interval around zero may only give up, never lie
                !enc.is_valid() || enc.is_unbounded() || b == 0.0 || enc.contains(a / b)
            } else {
                let r = a / b;
                // a - r b has the sign of (a/b - r) b
                holds(enc, r, (-r).mul_add(b, a) * b.signum())
            }
        }
        Op::Powi => {
            let enc = x.powi(c.n);
            if c.n < 0 && x.contains_zero() {
                // a pole inside the operand may only give up
                !enc.is_valid() || enc.is_unbounded() || enc.contains(a.powi(c.n))
            } else {
                let (hi, lo) = dd_powi(a, c.n.unsigned_abs());
                if c.n >= 0 {
                    holds(enc, hi, lo)
                } else {
                    let r = 1.0 / hi;
                    // 1/T - r has the sign of (1 - r T) T
                    let e = (-r).mul_add(hi, 1.0) - r * lo;
                    holds(enc, r, e * hi.signum())
                }
            }
        }
        Op::Sqrt => {
            let r = a.sqrt();
            holds(x.sqrt(), r, (-r).mul_add(r, a))
        }
        Op::Exp => libm_holds(x.exp(), a.exp()),
        Op::Ln => {
            if a == 0.0 {
                x.ln().lo() == f64::NEG_INFINITY
            } else {
                libm_holds(x.ln(), a.ln())
            }
        }
        Op::Sin => libm_holds(x.sin(), a.sin()),
        Op::Cos => libm_holds(x.cos(), a.cos()),
        Op::Tan => libm_holds(x.tan(), a.tan()),
        Op::Pow => libm_holds(x.pow(y), a.powf(b)),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{op:?}: x = {x} at {a:e}, y = {y} at {b:e}, n = {}", c.n))
    }
}
