//! Functions of the reverse estimate, `p` in (2, 4).

use super::{exp2, k0, tan_half, Params};
use crate::interval::Scalar;

fn c<T: Scalar>(x: f64) -> T {
    T::cst(x)
}

/// `(1 + r)^p K - ((1 + r^s)/2)^(p/s) - r^(p/2) tan(pi/2p)`, nonpositive on
/// [0, 1] for conjugate `p` in (2, 4).
pub fn reverse_main_scalar<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    let one = c::<T>(1.0);
    let half = T::ratio(1, 2);
    (one + r).pow(p) * k0(p) - ((one + r.pow(s)) * half).pow(p / s) - r.pow(p * half) * tan_half(p)
}

/// `omega1(s) = pi^2 (2^s + 1) csc^2(pi/2s) / (4 s^2)`.
///
/// With [`omega2`] this splits `s (2^s + 1) phi1''(s)` into a trigonometric
/// and an exponential part.
pub fn omega1<T: Scalar>(s: T) -> T {
    let csc = (T::pi() / (c::<T>(2.0) * s)).csc();
    T::pi().sqr() * (exp2(s) + c(1.0)) * csc.sqr() / (c::<T>(4.0) * s.sqr())
}

/// `omega2(s) = 2^s (2^s+1) s ln2 (-4^(s+1) + 2^(s+1) ln2 + s(2^(2s+1) ln2 + ln4)
///  - (4^s+1) ln8 + 4) / (4^s - 1)^2`; increasing on [4/3, 2].
pub fn omega2<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let two = c::<T>(2.0);
    let l2 = two.ln();
    let t = exp2(s);
    let t2 = t * t;
    let bracket = -c::<T>(4.0) * t2 + two * t * l2 + s * (two * t2 * l2 + two * l2)
        - (t2 + one) * c::<T>(3.0) * l2
        + c(4.0);
    t * (t + one) * s * l2 * bracket / (t2 - one).sqr()
}

/// `g(t) = (t^2 (4 + ln8) - 2t^2 ln t + ln(8/t^2) - t ln4 - 4) / (t - 1)` on
/// [5/2, 4], where `t = 2^s`.
pub fn lemma_g<T: Scalar>(t: T) -> T {
    let l8 = c::<T>(8.0).ln();
    let num = t.sqr() * (c::<T>(4.0) + l8) - c::<T>(2.0) * t.sqr() * t.ln() + (c::<T>(8.0) / t.sqr()).ln()
        - t * c::<T>(4.0).ln()
        - c(4.0);
    num / (t - c(1.0))
}

/// `t - g(t)`; increasing exactly when `g' <= 1`.
pub fn lemma_g_slope_gap<T: Scalar>(t: T) -> T {
    t - lemma_g(t)
}

/// `g(t) - 25/2`.
pub fn lemma_g_excess<T: Scalar>(t: T) -> T {
    lemma_g(t) - T::ratio(25, 2)
}

/// `(t-1)^2 t (g'(t) - 1)` written out:
/// `t^3 + t^3 ln8 - 4t^2 - 2t^2 ln8 - 2(t-2) t^2 ln t + t ln(t^2/2) + t + 2`.
pub fn lemma_g_psi<T: Scalar>(t: T) -> T {
    let l8 = c::<T>(8.0).ln();
    let two = c::<T>(2.0);
    t.powi(3) + t.powi(3) * l8 - c::<T>(4.0) * t.sqr() - two * t.sqr() * l8
        - two * (t - two) * t.sqr() * t.ln()
        + t * (t.sqr() / two).ln()
        + t
        + two
}

/// `-2s ln(2 sin(pi/2s)) - 2(s-1) ln cot(pi/2s)`, concave on [4/3, 2].
pub fn lemma34_fn<T: Scalar>(s: T) -> T {
    let two = c::<T>(2.0);
    let a = T::pi() / (two * s);
    -two * s * (two * a.sin()).ln() - two * (s - c(1.0)) * a.cot().ln()
}

/// `-2(s-1) ln((2^s - 1)/(2^s - 2))`, convex on [4/3, 2].
pub fn lemma35_fn<T: Scalar>(s: T) -> T {
    super::log_ratio_term(s)
}

/// `psi(t) = t^2 ln(t/2) - 2t(t-3) - 2 ln t - 4 + ln4`, nonpositive on
/// [2^(4/3), 4]; its sign controls the convexity of [`lemma35_fn`] after
/// `t = 2^s`.
pub fn lemma35_psi<T: Scalar>(t: T) -> T {
    let two = c::<T>(2.0);
    t.sqr() * (t / two).ln() - two * t * (t - c(3.0)) - two * t.ln() - c(4.0) + c::<T>(4.0).ln()
}
