//! Directed rounding for the four basic operations and `sqrt`.
//!
//! Each result is computed in round-to-nearest and then corrected by one ulp
//! only when an error-free transformation shows the result is inexact in the
//! wrong direction. Exact results stay exact, so `1 - 1` is `[0, 0]` rather
//! than a tiny interval around zero.

/// Below this magnitude the FMA residual may itself underflow.
const TINY: f64 = 1e-290;

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

#[inline]
fn overflow_down(s: f64) -> f64 {
    if s > 0.0 {
        f64::MAX
    } else {
        f64::NEG_INFINITY
    }
}

#[inline]
fn overflow_up(s: f64) -> f64 {
    if s > 0.0 {
        f64::INFINITY
    } else {
        -f64::MAX
    }
}

/// Error term of `a + b` (Knuth TwoSum).
#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

pub fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_down(s) } else { s };
    }
    if two_sum_err(a, b, s) < 0.0 {
        down(s)
    } else {
        s
    }
}

pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_up(s) } else { s };
    }
    if two_sum_err(a, b, s) > 0.0 {
        up(s)
    } else {
        s
    }
}

pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

/// Product with the set-based convention `0 * inf = 0`.
fn mul_special(a: f64, b: f64) -> Option<f64> {
    if a == 0.0 || b == 0.0 {
        return Some(0.0);
    }
    if a.is_infinite() || b.is_infinite() {
        let neg = (a < 0.0) != (b < 0.0);
        return Some(if neg { f64::NEG_INFINITY } else { f64::INFINITY });
    }
    None
}

pub fn mul_down(a: f64, b: f64) -> f64 {
    if let Some(v) = mul_special(a, b) {
        return v;
    }
    let p = a * b;
    if !p.is_finite() {
        return overflow_down(p);
    }
    if p.abs() < TINY {
        return down(p);
    }
    if a.mul_add(b, -p) < 0.0 {
        down(p)
    } else {
        p
    }
}

pub fn mul_up(a: f64, b: f64) -> f64 {
    if let Some(v) = mul_special(a, b) {
        return v;
    }
    let p = a * b;
    if !p.is_finite() {
        return overflow_up(p);
    }
    if p.abs() < TINY {
        return up(p);
    }
    if a.mul_add(b, -p) > 0.0 {
        up(p)
    } else {
        p
    }
}

/// Quotient for a divisor that is known to be nonzero.
fn div_special(a: f64, b: f64) -> Option<(f64, f64)> {
    let neg = (a < 0.0) != (b < 0.0);
    if a == 0.0 {
        return Some((0.0, 0.0));
    }
    match (a.is_infinite(), b.is_infinite()) {
        (true, true) => Some(if neg {
            (f64::NEG_INFINITY, 0.0)
        } else {
            (0.0, f64::INFINITY)
        }),
        (true, false) => {
            let v = if neg { f64::NEG_INFINITY } else { f64::INFINITY };
            Some((v, v))
        }
        (false, true) => Some((0.0, 0.0)),
        (false, false) => None,
    }
}

/// Direction of the rounding error of `q = a / b`: the sign of `a/b - q`.
fn div_err_sign(a: f64, b: f64, q: f64) -> Option<f64> {
    if q.abs() < TINY || a.abs() < TINY || !q.is_finite() {
        return None;
    }
    let r = (-q).mul_add(b, a);
    Some(if b > 0.0 { r } else { -r })
}

pub fn div_down(a: f64, b: f64) -> f64 {
    if let Some((lo, _)) = div_special(a, b) {
        return lo;
    }
    let q = a / b;
    if !q.is_finite() {
        return overflow_down(q);
    }
    match div_err_sign(a, b, q) {
        Some(e) if e >= 0.0 => q,
        _ => down(q),
    }
}

pub fn div_up(a: f64, b: f64) -> f64 {
    if let Some((_, hi)) = div_special(a, b) {
        return hi;
    }
    let q = a / b;
    if !q.is_finite() {
        return overflow_up(q);
    }
    match div_err_sign(a, b, q) {
        Some(e) if e <= 0.0 => q,
        _ => up(q),
    }
}

pub fn sqrt_down(x: f64) -> f64 {
    let s = x.sqrt();
    if x == 0.0 || x.is_infinite() {
        return s;
    }
    if x < TINY {
        return down(s).max(0.0);
    }
    if (-s).mul_add(s, x) < 0.0 {
        down(s)
    } else {
        s
    }
}

pub fn sqrt_up(x: f64) -> f64 {
    let s = x.sqrt();
    if x == 0.0 || x.is_infinite() {
        return s;
    }
    if x < TINY {
        return up(s);
    }
    if (-s).mul_add(s, x) > 0.0 {
        up(s)
    } else {
        s
    }
}

/// Moves `x` down by `n` ulps.
pub fn inflate_down(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_down();
    }
    x
}

/// Moves `x` up by `n` ulps.
pub fn inflate_up(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_up();
    }
    x
}
