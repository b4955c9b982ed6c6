//! Closed-form functions behind the forward and reverse estimates, and the
//! catalog of inequality claims built from them.
//!
//! Every formula is written once against [`Scalar`] and therefore runs in
//! floating point, in interval arithmetic and through dual numbers. The
//! exponent pair enters as [`Params<T>`]; for a conjugate pair the second
//! exponent is recomputed as `p / (p - 1)` inside the numeric mode, so interval
//! evaluations enclose the exact conjugate rather than its rounded value.

mod catalog;
mod forward;
mod logforms;
mod reverse;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{Dual, Scalar};

pub use catalog::{
    claim_catalog, find_claim, Assertion, BoundaryRule, Claim, ClaimInstance, Expected, FnId,
    ParamRule, Plan, Side,
};
pub use forward::*;
pub use logforms::*;
pub use reverse::*;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum FunctionError {
    #[error("domain error: {0}")]
    Domain(String),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, FunctionError> {
    Err(FunctionError::Domain(msg.into()))
}

/// `p / (p - 1)`.
pub fn conjugate_exponent(p: f64) -> Result<f64, FunctionError> {
    if !(p > 1.0) || !p.is_finite() {
        return domain(format!("conjugate exponent needs p > 1, got {p}"));
    }
    Ok(p / (p - 1.0))
}

/// The exponents `(p, s)`.
///
/// `conjugate` records that `s` was defined as `p / (p - 1)`; interval
/// evaluations then rebuild `s` from `p` instead of trusting the rounded
/// `s` field.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentPair {
    pub p: f64,
    pub s: f64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub conjugate: bool,
}

impl ExponentPair {
    pub fn new(p: f64, s: f64) -> Result<Self, FunctionError> {
        if !(p > 1.0 && p.is_finite()) {
            return domain(format!("p must exceed 1, got {p}"));
        }
        if !(s > 0.0 && s.is_finite()) {
            return domain(format!("s must be positive, got {s}"));
        }
        Ok(ExponentPair { p, s, conjugate: false })
    }

    pub fn conjugate(p: f64) -> Result<Self, FunctionError> {
        let s = conjugate_exponent(p)?;
        Ok(ExponentPair { p, s, conjugate: true })
    }

    pub fn is_conjugate(&self) -> bool {
        (self.s - self.p / (self.p - 1.0)).abs() <= 1e-12
    }

    /// Hypothesis of the forward estimate: `p` in (4/3, 2), `0 < s <= p/(p-1)`.
    pub fn forward_range(&self) -> bool {
        self.p > 4.0 / 3.0 && self.p < 2.0 && self.s > 0.0 && self.s <= self.p / (self.p - 1.0) + 1e-12
    }

    /// Hypothesis of the reverse estimate: `p` in (2, 4), `s >= p/(p-1)`.
    pub fn reverse_range(&self) -> bool {
        self.p > 2.0 && self.p < 4.0 && self.s >= self.p / (self.p - 1.0) - 1e-12
    }

    /// The pair in numeric mode `T`.
    pub fn scalars<T: Scalar>(&self) -> Params<T> {
        let p = T::cst(self.p);
        let s = if self.conjugate { p / (p - T::cst(1.0)) } else { T::cst(self.s) };
        Params { p, s }
    }
}

/// Exponents already lifted into a numeric mode.
#[derive(Clone, Copy, Debug)]
pub struct Params<T> {
    pub p: T,
    pub s: T,
}

impl<T: Scalar> Params<T> {
    /// Placeholder for functions that take no exponents.
    pub fn none() -> Self {
        Params { p: T::cst(f64::NAN), s: T::cst(f64::NAN) }
    }
}

/// `1 / (2 cos(pi / 2p))^p`, the constant in front of `|z + conj w|^p`.
pub fn k0<T: Scalar>(p: T) -> T {
    (T::cst(2.0) * half_angle(p).cos()).pow(-p)
}

/// `tan(pi / 2p)`.
pub fn tan_half<T: Scalar>(p: T) -> T {
    half_angle(p).tan()
}

fn half_angle<T: Scalar>(p: T) -> T {
    T::pi() / (T::cst(2.0) * p)
}

/// `2^x` in any mode.
pub(crate) fn exp2<T: Scalar>(x: T) -> T {
    T::cst(2.0).pow(x)
}

/// Sharp forward constant `2^(1/s) / (2 cos(pi / 2p))`, for `p` in (1, 2].
pub fn sharp_constant_forward(pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(pair.p > 1.0 && pair.p <= 2.0) {
        return domain(format!("forward constant needs p in (1, 2], got {}", pair.p));
    }
    Ok(2f64.powf(1.0 / pair.s) / (2.0 * (std::f64::consts::PI / (2.0 * pair.p)).cos()))
}

/// Sharp reverse constant `2^(1 - 1/s) cos(pi / 2p)`, for `p` in [2, 4).
pub fn sharp_constant_reverse(pair: &ExponentPair) -> Result<f64, FunctionError> {
    if !(pair.p >= 2.0 && pair.p < 4.0) {
        return domain(format!("reverse constant needs p in [2, 4), got {}", pair.p));
    }
    Ok(2f64.powf(1.0 - 1.0 / pair.s) * (std::f64::consts::PI / (2.0 * pair.p)).cos())
}

/// `max(sec^2(pi/2p), csc^2(pi/2p))`: below this value of `s` the forward
/// estimate can hold at all.
pub fn s_threshold(p: f64) -> Result<f64, FunctionError> {
    if !(p > 1.0) {
        return domain(format!("threshold needs p > 1, got {p}"));
    }
    let a = std::f64::consts::PI / (2.0 * p);
    Ok((1.0 / a.cos().powi(2)).max(1.0 / a.sin().powi(2)))
}

/// A real function of a few variables that can be evaluated in every
/// numeric mode. Catalog functions bound to a pair implement it through
/// [`CatalogFn`]; tests and callers can supply their own.
pub trait ScalarFn: Sync {
    fn dim(&self) -> usize;
    fn eval<T: Scalar>(&self, x: &[T]) -> T;
}

/// A catalog function with its exponent pair fixed.
#[derive(Clone, Copy, Debug)]
pub struct CatalogFn {
    pub fn_id: FnId,
    pub pair: Option<ExponentPair>,
}

impl ScalarFn for CatalogFn {
    fn dim(&self) -> usize {
        self.fn_id.arity()
    }

    fn eval<T: Scalar>(&self, x: &[T]) -> T {
        let pr = match &self.pair {
            Some(pair) => pair.scalars(),
            None => Params::none(),
        };
        self.fn_id.eval(x, &pr)
    }
}

fn seed<T: Scalar>(x: &[T], var: usize) -> Vec<Dual<T>> {
    x.iter()
        .enumerate()
        .map(|(i, &v)| if i == var { Dual::var(v) } else { Dual::constant(v) })
        .collect()
}

/// Highest derivative order supported by [`derivative_along`].
pub const MAX_DERIVATIVE_ORDER: u32 = 4;

/// The `order`-th partial derivative of `f` in variable `var`, by nested
/// forward-mode duals.
///
/// # Panics
/// If `order` exceeds [`MAX_DERIVATIVE_ORDER`].
pub fn derivative_along<F: ScalarFn, T: Scalar>(f: &F, order: u32, var: usize, x: &[T]) -> T {
    match order {
        0 => f.eval(x),
        1 => f.eval(&seed(x, var)).d,
        2 => f.eval(&seed(&seed(x, var), var)).d.d,
        3 => f.eval(&seed(&seed(&seed(x, var), var), var)).d.d.d,
        4 => f.eval(&seed(&seed(&seed(&seed(x, var), var), var), var)).d.d.d.d,
        _ => panic!("derivative order {order} is not supported"),
    }
}

/// Gradient of `f` at `x`, one dual pass per variable.
pub fn gradient<F: ScalarFn, T: Scalar>(f: &F, x: &[T]) -> Vec<T> {
    (0..x.len()).map(|i| derivative_along(f, 1, i, x)).collect()
}

/// Hessian of `f` at `x` (symmetric, full matrix).
pub fn hessian<F: ScalarFn, T: Scalar>(f: &F, x: &[T]) -> Vec<Vec<T>> {
    let n = x.len();
    let mut h = vec![vec![T::cst(0.0); n]; n];
    for i in 0..n {
        let inner = seed(x, i);
        for j in i..n {
            let outer: Vec<Dual<Dual<T>>> = inner
                .iter()
                .enumerate()
                .map(|(k, &v)| if k == j { Dual::new(v, Dual::cst(1.0)) } else { Dual::constant(v) })
                .collect();
            let v = f.eval(&outer).d.d;
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;

    #[test]
    fn conjugate_is_an_involution() {
        assert_eq!(conjugate_exponent(2.0).unwrap(), 2.0);
        assert!((conjugate_exponent(4.0 / 3.0).unwrap() - 4.0).abs() < 1e-14);
        assert!((conjugate_exponent(1.6).unwrap() - 8.0 / 3.0).abs() < 1e-14);
        for &p in &[1.1, 1.5, 2.5, 7.0] {
            let back = conjugate_exponent(conjugate_exponent(p).unwrap()).unwrap();
            assert!((back - p).abs() < 1e-13);
        }
        assert!(conjugate_exponent(1.0).is_err());
        assert!(conjugate_exponent(0.5).is_err());
    }

    #[test]
    fn sharp_constants() {
        let c = |p, s| sharp_constant_forward(&ExponentPair::new(p, s).unwrap()).unwrap();
        assert!((c(2.0, 2.0) - 1.0).abs() < 1e-15);
        assert!((c(1.5, 3.0) - 2f64.cbrt()).abs() < 1e-14);
        assert!((c(1.6, 8.0 / 3.0) - 1.16713).abs() < 1e-5);
        let r = |p, s| sharp_constant_reverse(&ExponentPair::new(p, s).unwrap()).unwrap();
        assert!((r(2.0, 2.0) - 1.0).abs() < 1e-15);
        assert!((r(3.0, 1.5) - 1.09112).abs() < 1e-5);
        assert!((r(3.999999, 4.0 / 3.0) - 1.09868).abs() < 1e-5);
        assert!(sharp_constant_forward(&ExponentPair::new(2.5, 2.0).unwrap()).is_err());
        assert!(sharp_constant_reverse(&ExponentPair::new(1.5, 2.0).unwrap()).is_err());
    }

    #[test]
    fn thresholds() {
        assert!((s_threshold(2.0).unwrap() - 2.0).abs() < 1e-14);
        assert!((s_threshold(1.5).unwrap() - 4.0).abs() < 1e-13);
        assert!((s_threshold(4.0).unwrap() - 6.828427).abs() < 1e-6);
    }

    #[test]
    fn range_tags() {
        let f = ExponentPair::conjugate(1.5).unwrap();
        assert!(f.is_conjugate() && f.forward_range() && !f.reverse_range());
        let r = ExponentPair::conjugate(3.0).unwrap();
        assert!(r.reverse_range() && !r.forward_range());
        assert!(!ExponentPair::new(1.5, 4.0).unwrap().forward_range());
        assert!(ExponentPair::new(1.5, 2.0).unwrap().forward_range());
        assert!(ExponentPair::new(0.5, 2.0).is_err());
    }

    #[test]
    fn conjugate_pair_encloses_exact_s() {
        let pair = ExponentPair::conjugate(1.4).unwrap();
        let s: Interval = pair.scalars::<Interval>().s;
        // 1.4 as a double is slightly below 7/5, so s lies slightly above 3.5
        assert!(s.contains(pair.s));
        assert!(s.width() < 1e-14);
    }
}
