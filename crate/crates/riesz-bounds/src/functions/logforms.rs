//! One-variable forms obtained after fixing `r = 1/2`, taking logarithms and
//! substituting `p = s / (s - 1)`, together with the auxiliary functions used
//! to bound them.

use super::{domain, exp2, k0, tan_half, FunctionError};
use crate::interval::Scalar;

fn c<T: Scalar>(x: f64) -> T {
    T::cst(x)
}

fn ln2<T: Scalar>() -> T {
    c::<T>(2.0).ln()
}

/// `p / (p - 1)` inside the numeric mode.
fn conj<T: Scalar>(p: T) -> T {
    p / (p - c(1.0))
}

/// `phi1(s) = -(s-1) ln(2^s - 1) + (s-2) ln(2^s + 1) - s ln(2 sin(pi/2s)) + ln 6`.
///
/// Its sign is the sign of `F1(1/2)` at the conjugate pair: nonnegative on
/// [2, 4], nonpositive on [4/3, 2], zero at `s = 2`.
pub fn varphi1<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let t = exp2(s);
    let sine = (T::pi() / (c::<T>(2.0) * s)).sin();
    -(s - one) * (t - one).ln() + (s - c(2.0)) * (t + one).ln() - s * (c::<T>(2.0) * sine).ln()
        + c::<T>(6.0).ln()
}

/// Closed form of `phi1''(s)`:
/// `pi^2 csc^2(pi/2s) / (4 s^3)
///  + 2^s ln2 (-4^(s+1) + 2^(s+1) ln2 + s(2^(2s+1) ln2 + ln4) - 4^s ln8 + 4 - ln8) / (4^s - 1)^2`.
pub fn varphi1_second<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let two = c::<T>(2.0);
    let l2 = ln2::<T>();
    let t = exp2(s);
    let t2 = t * t;
    let csc = (T::pi() / (two * s)).csc();
    let first = T::pi().sqr() * csc.sqr() / (c::<T>(4.0) * s.powi(3));
    let bracket = -c::<T>(4.0) * t2 + two * t * l2 + s * (two * t2 * l2 + two * l2) - c::<T>(3.0) * t2 * l2
        + c(4.0)
        - c::<T>(3.0) * l2;
    first + t * l2 * bracket / (t2 - one).sqr()
}

/// `pi csc(pi/s) (s (pi csc(pi/s) - 4) - pi (s-2) cot(pi/s)) / s`, negative and
/// decreasing on [2, 4]. It is `s^3` times the second derivative of
/// [`lemma34_fn`].
pub fn aux_lemma_fn<T: Scalar>(s: T) -> T {
    let pi = T::pi();
    let a = pi / s;
    let csc = a.csc();
    pi * csc * (s * (pi * csc - c(4.0)) - pi * (s - c(2.0)) * a.cot()) / s
}

pub fn aux_lemma_fn_checked(s: f64) -> Result<f64, FunctionError> {
    if !(2.0..=4.0).contains(&s) {
        return domain(format!("auxiliary function is studied on [2, 4], got s = {s}"));
    }
    Ok(aux_lemma_fn(s))
}

/// Inner function `-(pi (2t-1) cot(pi t) + pi csc(pi t) - 4)` after the
/// substitution `t = 1/s`; nonnegative and decreasing on [1/4, 1/2].
pub fn aux_inner_psi<T: Scalar>(t: T) -> T {
    let pi = T::pi();
    let a = pi * t;
    -(pi * (c::<T>(2.0) * t - c(1.0)) * a.cot() + pi * a.csc() - c(4.0))
}

/// `omega(t) = -2 pi t + sin(2 pi t) - pi cos(pi t) + pi`, the sign of
/// `-psi'(t)` up to a positive factor; nonnegative on [1/4, 1/2].
pub fn aux_inner_omega<T: Scalar>(t: T) -> T {
    let pi = T::pi();
    -c::<T>(2.0) * pi * t + (c::<T>(2.0) * pi * t).sin() - pi * (pi * t).cos() + pi
}

/// `(2^s - 1) / (2^s - 2)` as a function of `p`, with `s = p / (p - 1)`.
pub fn secant_ratio<T: Scalar>(p: T) -> T {
    let t = exp2(conj(p));
    (t - c(1.0)) / (t - c(2.0))
}

/// `9p/14 + 3/14 - (2^s - 1)/(2^s - 2)` with `s = p/(p-1)`: the secant of a
/// convex function minus the function. Zero at `p = 4/3` and `p = 2`.
pub fn secant_gap<T: Scalar>(p: T) -> T {
    secant_line(p) - secant_ratio(p)
}

fn secant_line<T: Scalar>(p: T) -> T {
    T::ratio(9, 14) * p + T::ratio(3, 14)
}

pub fn secant_gap_checked(p: f64) -> Result<f64, FunctionError> {
    if !(p > 1.0 && p <= 2.0) {
        return domain(format!("secant gap is defined for p in (1, 2], got {p}"));
    }
    Ok(secant_gap(p))
}

/// `2^((p-2)/2) / 3^(p-1)`.
fn half_point_factor<T: Scalar>(p: T) -> T {
    exp2((p - c(2.0)) * T::ratio(1, 2)) / c::<T>(3.0).pow(p - c(1.0))
}

/// `F2(1/2)` at the conjugate pair:
/// `K - tan(pi/2p) (2^s - 1)/(2^s - 2) 2^((p-2)/2) / 3^(p-1)`.
pub fn sub_first<T: Scalar>(p: T) -> T {
    k0(p) - tan_half(p) * secant_ratio(p) * half_point_factor(p)
}

/// [`sub_first`] with the ratio replaced by its secant `9p/14 + 3/14`; a
/// stronger inequality, used on [4/3, 5/3].
pub fn sub_second<T: Scalar>(p: T) -> T {
    k0(p) - tan_half(p) * secant_line(p) * half_point_factor(p)
}

/// `-s ln 2 + ln(9/4) - 2s ln sin(pi/2s) - 2(s-1) ln cot(pi/2s) - 2(s-1) ln((2^s-1)/(2^s-2))`.
///
/// This is `2(s-1) ln` of the ratio of the two terms of [`sub_first`] at
/// `p = s/(s-1)`: nonnegative on [2, 5/2], nonpositive on [4/3, 2].
pub fn log_form<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let two = c::<T>(2.0);
    let a = T::pi() / (two * s);
    let t = exp2(s);
    -s * ln2() + T::ratio(9, 4).ln() - two * s * a.sin().ln() - two * (s - one) * a.cot().ln()
        - two * (s - one) * ((t - one) / (t - two)).ln()
}

/// [`log_form`] with the secant `(12s - 3)/(14(s - 1))` in place of the ratio;
/// nonnegative on [5/2, 4].
pub fn sharper_log_form<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let two = c::<T>(2.0);
    let a = T::pi() / (two * s);
    let secant = (c::<T>(12.0) * s - c(3.0)) / (c::<T>(14.0) * (s - one));
    -s * ln2() + T::ratio(9, 4).ln() - two * s * a.sin().ln() - two * (s - one) * a.cot().ln()
        - two * (s - one) * secant.ln()
}

/// `-2(s-1) ln((2^s - 1)/(2^s - 2))`, convex on [4/3, 5/2].
pub fn log_ratio_term<T: Scalar>(s: T) -> T {
    let one = c::<T>(1.0);
    let t = exp2(s);
    -c::<T>(2.0) * (s - one) * ((t - one) / (t - c(2.0))).ln()
}

/// [`log_ratio_term`] minus its tangent at `s = 2`,
/// `-ln(9/4) + ln(8 * 2^(1/3) / 9)(s - 2)`. Nonnegative on [2, 5/2] with a
/// double zero at `s = 2`.
pub fn tangent_gap<T: Scalar>(s: T) -> T {
    let slope = (c::<T>(8.0) * exp2(T::ratio(1, 3)) / c(9.0)).ln();
    log_ratio_term(s) - (-T::ratio(9, 4).ln() + slope * (s - c(2.0)))
}

/// `psi(t) = -2t^4 + t^3 ln4 - 4t^2 ln8 + 8t^2 ln t + t ln4 + 2`, nonpositive on
/// [4, 16]; it governs the monotonicity of the second term of `phi1''` after
/// `t = 2^s`.
pub fn quartic_psi<T: Scalar>(t: T) -> T {
    let l4 = c::<T>(4.0).ln();
    let l8 = c::<T>(8.0).ln();
    -c::<T>(2.0) * t.powi(4) + t.powi(3) * l4 - c::<T>(4.0) * t.sqr() * l8
        + c::<T>(8.0) * t.sqr() * t.ln()
        + t * l4
        + c(2.0)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::interval::{Dual, Interval};

    type D2 = Dual<Dual<f64>>;

    fn second<F: Fn(D2) -> D2>(f: F, x: f64) -> f64 {
        f(Dual::var(Dual::var(x))).d.d
    }

    fn first<F: Fn(Dual<f64>) -> Dual<f64>>(f: F, x: f64) -> f64 {
        f(Dual::var(x)).d
    }

    #[test]
    fn varphi1_reference_values() {
        assert!(varphi1(2.0).abs() < 1e-14);
        assert!((varphi1(4.0) - 0.40364).abs() < 5e-5, "{}", varphi1(4.0));
        assert!((varphi1(4.0 / 3.0) + 0.00537).abs() < 5e-5, "{}", varphi1(4.0 / 3.0));
        let slope = PI / 4.0 - 11.0 / 6.0 * 2f64.ln() - 3f64.ln() + 5f64.ln();
        assert!((first(varphi1, 2.0) - slope).abs() < 1e-13);
        assert!(slope > 0.0);
    }

    #[test]
    fn varphi1_interval_value_at_two_contains_zero() {
        assert!(varphi1(Interval::point(2.0)).contains_zero());
    }

    #[test]
    fn closed_form_second_derivative_matches_duals() {
        for i in 0..=25 {
            let s = 1.4 + 2.5 * i as f64 / 25.0;
            let ad = second(varphi1, s);
            let cf = varphi1_second(s);
            assert!((ad - cf).abs() <= 1e-8 * cf.abs().max(1e-2), "{s}: {ad} {cf}");
        }
    }

    #[test]
    fn aux_function_values() {
        assert!((aux_lemma_fn(2.0) - PI * (PI - 4.0)).abs() < 1e-13);
        assert!(aux_lemma_fn(4.0) < 0.0);
        assert!(aux_lemma_fn(3.0) > aux_lemma_fn(4.0));
        assert!(aux_lemma_fn_checked(1.5).is_err());
        // the auxiliary function is s^3 times the second derivative of the
        // sine and cotangent part
        for &s in &[1.5, 2.0, 2.7, 3.6] {
            let ad = second(super::super::lemma34_fn, s);
            assert!((aux_lemma_fn(s) - s.powi(3) * ad).abs() < 1e-10, "{s}");
        }
    }

    #[test]
    fn aux_derivative_vanishes_at_two() {
        assert!(first(aux_lemma_fn, 2.0).abs() < 1e-13);
        assert!(second(aux_lemma_fn, 2.0) < -1.0);
    }

    #[test]
    fn inner_functions() {
        let w = -PI / 2f64.sqrt() + PI / 2.0 + 1.0;
        assert!((aux_inner_omega(0.25) - w).abs() < 1e-14 && (w - 0.3494).abs() < 1e-4);
        assert!(aux_inner_omega(0.5).abs() < 1e-14);
        assert!((aux_inner_psi(0.5) - (4.0 - PI)).abs() < 1e-14);
        // psi' = -pi csc^2(pi t) omega(t)
        for &t in &[0.3, 0.4, 0.45] {
            let ad = first(aux_inner_psi, t);
            let cf = -PI / (PI * t).sin().powi(2) * aux_inner_omega(t);
            assert!((ad - cf).abs() < 1e-12);
        }
    }

    #[test]
    fn secant_gap_vanishes_at_both_ends() {
        assert!(secant_gap(2.0).abs() < 1e-15);
        assert!(secant_gap(4.0 / 3.0).abs() < 1e-14);
        assert!(secant_gap(5.0 / 3.0) > 0.0);
        assert!(secant_gap_checked(1.0).is_err());
    }

    #[test]
    fn subinequalities_at_the_ends() {
        assert!(sub_first(2.0).abs() < 1e-15);
        assert!(sub_second(2.0).abs() < 1e-15);
        assert!(sub_second(1.5) > 0.0);
        for &p in &[1.4, 1.6, 1.9] {
            assert!(sub_second(p) <= sub_first(p));
        }
    }

    #[test]
    fn log_form_is_the_log_of_the_first_subinequality() {
        for &s in &[1.4, 1.7, 2.2, 2.5] {
            let p = s / (s - 1.0);
            let ratio = k0(p) / (tan_half(p) * secant_ratio(p) * half_point_factor(p));
            assert!((log_form(s) - 2.0 * (s - 1.0) * ratio.ln()).abs() < 1e-12, "{s}");
        }
        // the printed reverse variant differs only in a lost factor 2 inside
        // the sine logarithm and is positive at s = 2, so it cannot be the
        // intended nonpositive function
        let printed = |s: f64| log_form(s) + 2.0 * s * 2f64.ln();
        assert!(printed(2.0) > 2.7);
        assert!(log_form(2.0).abs() < 1e-14);
    }

    #[test]
    fn sharper_log_form_values() {
        let at_five_halves = ((343.0 / 81.0) * (7.0 / 5.0 - 3.0 / 5f64.sqrt()).sqrt()).ln();
        assert!((sharper_log_form(2.5) - at_five_halves).abs() < 1e-13);
        let at_four = ((117649.0 / 1265625.0) * 64.0 * (3.0 - 2.0 * 2f64.sqrt())).ln();
        assert!((sharper_log_form(4.0) - at_four).abs() < 1e-13);
        assert!((at_four - 0.0205202).abs() < 1e-6);
    }

    #[test]
    fn tangent_gap_has_a_double_zero() {
        assert!(tangent_gap(2.0).abs() < 1e-14);
        assert!(first(tangent_gap, 2.0).abs() < 1e-13);
        assert!(second(tangent_gap, 2.0) > 0.0);
        assert!(tangent_gap(2.5) > 0.0);
    }

    #[test]
    fn quartic_values() {
        assert!((quartic_psi(4.0) - (-510.0 + 200.0 * 2f64.ln())).abs() < 1e-10);
        assert!((first(quartic_psi, 4.0) - (65.0 * 4f64.ln() - 480.0)).abs() < 1e-10);
        assert!(quartic_psi(16.0) < 0.0);
    }
}
