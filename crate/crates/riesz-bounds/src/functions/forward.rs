//! The pointwise inequality, its restriction to `t = 0` and the case split
//! at the stationary points.

use num_complex::Complex64;

use super::{domain, exp2, k0, tan_half, ExponentPair, FunctionError, Params};
use crate::interval::Scalar;

fn one<T: Scalar>() -> T {
    T::cst(1.0)
}

fn half<T: Scalar>() -> T {
    T::ratio(1, 2)
}

/// `((1 + r^s) / 2)^e`.
fn power_mean_term<T: Scalar>(r: T, s: T, e: T) -> T {
    ((one::<T>() + r.pow(s)) * half()).pow(e)
}

/// `Phi(r, t)`, the reduced form of the pointwise inequality.
///
/// The base `1 + r^2 + 2r cos t` is evaluated as `(1-r)^2 + 4r cos^2(t/2)`,
/// which is nonnegative term by term, so interval mode never sees a negative
/// base near `(r, t) = (1, pi)`.
pub fn phi<T: Scalar>(r: T, t: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    let base = (one::<T>() - r).sqr() + T::cst(4.0) * r * (t * half()).cos().sqr();
    -power_mean_term(r, s, p / s) + base.pow(p * half()) * k0(p)
        - r.pow(p * half()) * tan_half(p) * (t * p * half()).cos()
}

/// [`phi`] in floating point, rejecting `p` outside (1, 2).
pub fn phi_checked(r: f64, t: f64, pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(pair.p > 1.0 && pair.p < 2.0) {
        return domain(format!("phi needs p in (1, 2), got {}", pair.p));
    }
    Ok(phi(r, t, &pair.scalars()))
}

/// The unreduced two-variable form
/// `-((|z|^s + |w|^s)/2)^(p/s) + K |z + conj w|^p - tan(pi/2p) Re (zw)^(p/2)`.
///
/// `(zw)^(p/2)` uses the principal branch, argument in (-pi, pi]. With
/// `M = max(|z|, |w|)`, `r = min/M` and `t = arg(zw)` this equals
/// `M^p * phi(r, t)`.
pub fn main_minorant(z: Complex64, w: Complex64, pair: &ExponentPair) -> f64 {
    let (p, s) = (pair.p, pair.s);
    let mean = ((z.norm().powf(s) + w.norm().powf(s)) / 2.0).powf(p / s);
    let middle = (z + w.conj()).norm().powf(p) * k0(p);
    let zw = z * w;
    let last = if zw == Complex64::new(0.0, 0.0) { 0.0 } else { zw.powf(p / 2.0).re };
    -mean + middle - tan_half(p) * last
}

/// `F(r) = Phi(r, 0) / (1 + r)^p`.
pub fn big_f<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    k0(p) - (power_mean_term(r, s, p / s) + r.pow(p * half()) * tan_half(p)) / (one::<T>() + r).pow(p)
}

/// Closed form of `F'(r)`:
/// `(p/2) r^(p/2-1) (1-r) / (1+r)^(p+1) * (Q(r) - tan(pi/2p))`, with `Q` the
/// left side of the stationary equation.
pub fn big_f_prime<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let p = pr.p;
    let lead = p * half() * r.pow(p * half() - one()) * (one::<T>() - r) / (one::<T>() + r).pow(p + one());
    lead * stationary_residual(r, pr)
}

pub fn big_f_prime_checked(r: f64, pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("F' is evaluated on (0, 1), got r = {r}"));
    }
    Ok(big_f_prime(r, &pair.scalars()))
}

/// `(1 - r^(s-1))/(1 - r) * ((1 + r^s)/2)^(p/s - 1) * r^(1 - p/2) - tan(pi/2p)`.
///
/// Its roots in (0, 1) are the stationary points of [`big_f`]. The quotient is
/// a divided difference, so `r = 1` is harmless.
pub fn stationary_residual<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    r.pow_dd(s - one(), 1) * power_mean_term(r, s, p / s - one()) * r.pow(one::<T>() - p * half())
        - tan_half(p)
}

pub fn stationary_residual_checked(r: f64, pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("stationary residual is evaluated on (0, 1), got r = {r}"));
    }
    Ok(stationary_residual(r, &pair.scalars()))
}

/// `L(r, p, s) = p(1-r)(r^s-1)(r^s-r) + 2sr(r^(s-1) - r^(s+1)) + 2r(r^(2s) - 1)`.
///
/// `p` and `s` are free here, which is why they are arguments rather than a
/// [`Params`].
pub fn lemma_poly<T: Scalar>(r: T, p: T, s: T) -> T {
    let one = one::<T>();
    let two = T::cst(2.0);
    let rs = r.pow(s);
    p * (one - r) * (rs - one) * (rs - r) + two * s * r * (r.pow(s - one) - r.pow(s + one))
        + two * r * (r.pow(two * s) - one)
}

/// `A(r, s) = r(1-r)(1-r^s)(1-r^(s-1))`, nonnegative on [0, 1] for `s >= 1`.
pub fn lemma_poly_a<T: Scalar>(r: T, s: T) -> T {
    let one = one::<T>();
    r * (one - r) * (one - r.pow(s)) * (one - r.pow(s - one))
}

/// The `p`-dependent part `(p - 2) A(r, s)` of [`lemma_poly`].
pub fn lemma_poly_p_term<T: Scalar>(r: T, p: T, s: T) -> T {
    (p - T::cst(2.0)) * lemma_poly_a(r, s)
}

/// `H(a, r) = (r^-a - r^a)/(2a) - (r^-1 - r)/2`, i.e. `sinh(ax)/a - sinh(x)`
/// at `x = -ln r`.
///
/// `L = (p - 2) A - 4a r^(2+a) H(a, r)` with `a = s - 1`. `H` vanishes at
/// `a = 1` and `dH/da = r^-a m(r^(2a)) / (2a^2)`, so the sign of `H` follows
/// from `m >= 0`.
pub fn lemma_poly_h(a: f64, r: f64) -> f64 {
    (r.powf(-a) - r.powf(a)) / (2.0 * a) - (1.0 / r - r) / 2.0
}

/// `m(u) = -(1 + u) ln(u) / 2 - (1 - u)`, nonnegative on [0, 1] with a triple
/// zero at `u = 1`.
pub fn lemma_m<T: Scalar>(u: T) -> T {
    let one = one::<T>();
    -(one + u) * u.ln() * half() - (one - u)
}

/// First case function,
/// `K - ((1 + r^s)/2)^(p/s - 1) (1 + r)^(1-p) (1 - r^s) / (2(1 - r))`.
///
/// The quotient is a divided difference, so `r = 1` gives the limit `s/2`.
pub fn case_f1<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    k0(p) - power_mean_term(r, s, p / s - one()) * (one::<T>() + r).pow(one::<T>() - p)
        * r.pow_dd(s, 1) * half()
}

/// [`case_f1`] with the middle exponent written `p - 2`, as in the reverse
/// setting. Equal to `case_f1` for conjugate pairs, where `p/s = p - 1`.
pub fn case_f1_reverse_form<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    k0(p) - power_mean_term(r, s, p - T::cst(2.0)) * (one::<T>() + r).pow(one::<T>() - p)
        * r.pow_dd(s, 1) * half()
}

/// Second case function,
/// `K - tan(pi/2p) r^(p/2-1) (1 + r)^(1-p) (1 - r^s) / (2(1 - r^(s-1)))`.
///
/// Both quotients are divided differences; at `r = 1` the ratio tends to
/// `s / (s - 1)`.
pub fn case_f2<T: Scalar>(r: T, pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    let ratio = r.pow_dd(s, 1) / r.pow_dd(s - one(), 1);
    k0(p) - tan_half(p) * r.pow(p * half() - one()) * (one::<T>() + r).pow(one::<T>() - p) * ratio * half()
}

pub fn case_f1_checked(r: f64, pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(0.0..=1.0).contains(&r) {
        return domain(format!("F1 is defined on [0, 1], got r = {r}"));
    }
    Ok(case_f1(r, &pair.scalars()))
}

pub fn case_f2_checked(r: f64, pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(r > 0.0 && r <= 1.0) {
        return domain(format!("F2 is defined on (0, 1], got r = {r}"));
    }
    Ok(case_f2(r, &pair.scalars()))
}

/// `F1(1/2)` in closed form: `K - 6^(1-p) (2^s - 1) / (2^s + 1)^(2-p)`.
pub fn case_f1_at_half<T: Scalar>(pr: &Params<T>) -> T {
    let Params { p, s } = *pr;
    let two_s = exp2(s);
    k0(p) - T::cst(6.0).pow(one::<T>() - p) * (two_s - one()) / (two_s + one()).pow(T::cst(2.0) - p)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::interval::{derivative, Dual, Interval};

    fn pair(p: f64, s: f64) -> Params<f64> {
        ExponentPair::new(p, s).unwrap().scalars()
    }

    fn conj(p: f64) -> Params<f64> {
        ExponentPair::conjugate(p).unwrap().scalars()
    }

    #[test]
    fn phi_reference_values() {
        // the pair (3/2, 4) lies outside the forward range and fails here
        let v = phi(0.5, PI / 2.0, &pair(1.5, 4.0));
        assert!(v < -5e-4 && v > -1e-3, "{v}");
        assert!((phi(0.0, 1.1, &pair(1.5, 3.0)) - (1.0 - 0.5f64.sqrt())).abs() < 1e-14);
        // r = 1, t = pi: the middle term vanishes
        let v = phi(1.0, PI, &pair(1.5, 3.0));
        let expect = -1.0 - 3f64.sqrt() * (3.0 * PI / 4.0).cos();
        assert!((v - expect).abs() < 1e-12 && (v - 0.22474).abs() < 1e-5);
        assert!(phi_checked(0.5, 0.0, &ExponentPair::new(2.5, 2.0).unwrap()).is_err());
    }

    #[test]
    fn phi_vanishes_at_the_touch_point() {
        for &p in &[1.4, 1.5, 1.75, 1.9] {
            let v = phi(1.0, PI / p, &conj(p));
            assert!(v.abs() < 1e-14, "{p}: {v}");
        }
    }

    #[test]
    fn f_is_phi_at_zero_angle() {
        for &p in &[1.4, 1.5, 1.9] {
            let pr = conj(p);
            for i in 0..=20 {
                let r = i as f64 / 20.0;
                let lhs = big_f(r, &pr) * (1.0 + r).powf(p);
                let rhs = phi(r, 0.0, &pr);
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-3), "{r}");
            }
        }
    }

    #[test]
    fn f_reference_values() {
        let pr = pair(1.5, 3.0);
        let expect = 2f64.powf(-1.5) * (2f64.powf(1.5) - 1.0 - 3f64.sqrt());
        assert!((big_f(1.0, &pr) - expect).abs() < 1e-14 && (expect - 0.03408).abs() < 1e-5);
        assert!((big_f(0.0, &pr) - (1.0 - 0.5f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn closed_form_derivative_matches_differences_and_duals() {
        let pr = pair(1.5, 3.0);
        let h = 1e-6;
        for &r in &[0.05, 0.3, 0.6, 0.95] {
            let fd = (big_f(r + h, &pr) - big_f(r - h, &pr)) / (2.0 * h);
            let cf = big_f_prime(r, &pr);
            assert!((fd - cf).abs() <= 1e-6 * cf.abs().max(1e-3), "{r}: {fd} {cf}");
            let ad = derivative(|x: Dual<f64>| big_f(x, &Params { p: Dual::cst(1.5), s: Dual::cst(3.0) }), r);
            assert!((ad - cf).abs() < 1e-12);
        }
        // F decreases near 0 and increases near 1, so F'(0+) F'(1-) <= 0
        assert!(big_f_prime(0.01, &pr) < 0.0 && big_f_prime(0.99, &pr) > 0.0);
        assert!(big_f_prime_checked(0.0, &ExponentPair::new(1.5, 3.0).unwrap()).is_err());
    }

    #[test]
    fn stationary_residual_reference_values() {
        let pr = pair(1.5, 3.0);
        assert!((stationary_residual(1.0, &pr) - (2.0 - 3f64.sqrt())).abs() < 1e-14);
        assert!((stationary_residual(1.0 - 1e-9, &pr) - 0.26795).abs() < 1e-5);
        assert!(stationary_residual(0.1, &pr) < 0.0);
        assert!(stationary_residual(0.53, &pr) < 0.0 && stationary_residual(0.54, &pr) > 0.0);
    }

    #[test]
    fn lemma_poly_reference_values() {
        assert!((lemma_poly(0.5, 2.0, 3.0) + 0.09375).abs() < 1e-15);
        for &(p, s) in &[(1.5, 2.5), (3.0, 1.5), (2.0, 4.0)] {
            assert_eq!(lemma_poly(1.0, p, s), 0.0);
            assert_eq!(lemma_poly(0.0, p, s), 0.0);
        }
    }

    #[test]
    fn lemma_poly_splits_into_p_term_and_h() {
        for &(r, p, s) in &[(0.3, 1.7, 2.5), (0.8, 3.1, 1.5), (0.05, 2.0, 3.9), (0.97, 3.9, 1.34)] {
            let a = s - 1.0;
            let split = lemma_poly_p_term(r, p, s) - 4.0 * a * r.powf(2.0 + a) * lemma_poly_h(a, r);
            assert!((lemma_poly(r, p, s) - split).abs() < 1e-14, "{r} {p} {s}");
        }
    }

    #[test]
    fn h_derivative_in_a_is_given_by_m() {
        for &(a, r) in &[(0.5, 0.3), (1.7, 0.8), (2.5, 0.1)] {
            let da = 1e-6;
            let fd = (lemma_poly_h(a + da, r) - lemma_poly_h(a - da, r)) / (2.0 * da);
            let cf = r.powf(-a) * lemma_m(r.powf(2.0 * a)) / (2.0 * a * a);
            assert!((fd - cf).abs() < 1e-6 * cf.abs().max(1.0), "{a} {r}: {fd} {cf}");
        }
        assert_eq!(lemma_poly_h(1.0, 0.4), 0.0);
    }

    #[test]
    fn m_has_a_triple_zero_at_one() {
        let m3 = |u: f64| {
            let x: Dual<Dual<Dual<f64>>> = Dual::var(Dual::var(Dual::var(u)));
            lemma_m(x)
        };
        let y = m3(1.0);
        assert_eq!(y.v.v.v, 0.0);
        assert!(y.d.v.v.abs() < 1e-15 && y.d.d.v.abs() < 1e-15);
        assert!((y.d.d.d + 0.5).abs() < 1e-14);
        for i in 1..20 {
            assert!(lemma_m(i as f64 / 20.0) > 0.0);
        }
    }

    #[test]
    fn case_functions() {
        let (p, s) = (1.5, 3.0);
        let pr = pair(p, s);
        let expect = k0(p) - 0.5f64.powf(p / s - 1.0) * 0.5;
        assert!((case_f1(0.0, &pr) - expect).abs() < 1e-15);
        assert!((case_f1(0.5, &pr) - case_f1_at_half(&pr)).abs() < 1e-14);
        assert!(case_f1(0.5, &pr) >= 0.0);
        assert!((case_f1(1.0, &pr) - (k0(p) - 1.0 * 2f64.powf(1.0 - p) * s / 2.0)).abs() < 1e-14);
        let rev = conj(3.0);
        assert!(case_f2(0.5, &rev) <= 0.0);
        assert!((case_f2(1.0, &pr) - (k0(p) - tan_half(p) * 2f64.powf(1.0 - p) * s / (2.0 * (s - 1.0)))).abs() < 1e-14);
        let direct = |r: f64| {
            k0(p) - tan_half(p) * r.powf(p / 2.0 - 1.0) / (1.0 + r).powf(p - 1.0) * (1.0 - r.powf(s))
                / (2.0 * (1.0 - r.powf(s - 1.0)))
        };
        for &r in &[0.5, 0.7, 0.9] {
            assert!((case_f2(r, &pr) - direct(r)).abs() < 1e-13);
        }
    }

    #[test]
    fn f1_exponent_forms_agree_for_conjugate_pairs() {
        for &p in &[1.4, 1.75, 2.5, 3.75] {
            let pr = conj(p);
            assert!((pr.p / pr.s - 1.0 - (pr.p - 2.0)).abs() < 1e-14);
            for &r in &[0.0, 0.2, 0.5] {
                assert!((case_f1(r, &pr) - case_f1_reverse_form(r, &pr)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn reduction_identity_for_minorant() {
        let pr = ExponentPair::new(1.5, 4.0).unwrap();
        let z = Complex64::new(1.0, 0.0);
        let w = Complex64::new(0.0, 0.5);
        let v = main_minorant(z, w, &pr);
        assert!((v - phi(0.5, PI / 2.0, &pr.scalars())).abs() < 1e-14);
        assert_eq!(main_minorant(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), &pr), 0.0);
        let v = main_minorant(z, Complex64::new(0.0, 0.0), &ExponentPair::new(1.5, 3.0).unwrap());
        assert!((v - (1.0 - 0.5f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn interval_mode_encloses_float_mode() {
        let pr = ExponentPair::conjugate(1.5).unwrap();
        let pi: Params<Interval> = pr.scalars();
        let pf: Params<f64> = pr.scalars();
        let r = Interval::new(0.49, 0.51).unwrap();
        let t = Interval::new(1.0, 1.1).unwrap();
        assert!(phi(r, t, &pi).contains(phi(0.5, 1.05, &pf)));
        assert!(big_f(r, &pi).contains(big_f(0.5, &pf)));
        let r1 = Interval::new(0.9, 1.0).unwrap();
        assert!(case_f2(r1, &pi).contains(case_f2(0.95, &pf)));
        assert!(case_f2(r1, &pi).contains(case_f2(1.0, &pf)));
    }

    proptest::proptest! {
        #[test]
        fn power_mean_grows_with_s(r in 0.0..=1.0f64, s1 in 0.2..6.0f64, ds in 0.0..4.0f64) {
            // ((1 + r^s)/2)^(1/s) is the power mean of 1 and r
            let s2 = s1 + ds;
            let m1 = power_mean_term(r, s1, 1.0 / s1);
            let m2 = power_mean_term(r, s2, 1.0 / s2);
            proptest::prop_assert!(m1 <= m2 * (1.0 + 1e-14), "{m1} > {m2}");
        }

        #[test]
        fn phi_is_even_in_t(r in 0.0..=1.0f64, t in 0.0..PI, p in 1.34..1.99f64) {
            let pr = conj(p);
            let (a, b) = (phi(r, t, &pr), phi(r, -t, &pr));
            proptest::prop_assert!((a - b).abs() <= 1e-13 * (1.0 + a.abs()), "{a} vs {b}");
        }
    }
}
