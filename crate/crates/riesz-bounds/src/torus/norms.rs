use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use super::{Part, TorusError, TorusFunction};
use crate::functions::ExponentPair;

/// Grid points per chunk of the quadrature sum. Chunks are summed in
/// parallel and then in order, so the result does not depend on threads.
const CHUNK: usize = 1024;

/// `max(32768, 8N, 4(N + 1))`, rounded up to a power of two.
///
/// Near a zero of `f` the integrand `|f|^p` behaves like `|t - t0|^p`, and
/// the rectangle rule error decays only like `M^-(p+1)`. On random degree-16
/// polynomials a grid of 4096 points still moves under doubling by up to
/// 5e-8 at `p = 1.4`; at 32768 the change stays below 1e-10.
pub fn default_grid_size(degree: usize) -> usize {
    32768usize.max(8 * degree).max(4 * (degree + 1)).next_power_of_two()
}

/// A uniform grid of `M` points on the circle with planned transforms.
#[derive(Clone)]
pub struct TorusGrid {
    m: usize,
    inverse: Arc<dyn Fft<f64>>,
    forward: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for TorusGrid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TorusGrid").field("m", &self.m).finish()
    }
}

impl TorusGrid {
    pub fn new(m: usize) -> Result<Self, TorusError> {
        if m < 2 || !m.is_power_of_two() {
            return Err(TorusError::Grid(format!("grid size must be a power of two, got {m}")));
        }
        let mut planner = FftPlanner::new();
        Ok(TorusGrid { m, inverse: planner.plan_fft_inverse(m), forward: planner.plan_fft_forward(m) })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Rejects grids too coarse for quadrature of `|f|^p`.
    fn check(&self, f: &TorusFunction) -> Result<(), TorusError> {
        if self.m < 2 * f.degree() + 2 {
            return Err(TorusError::Grid(format!("grid of {} points is too coarse for degree {}", self.m, f.degree())));
        }
        Ok(())
    }

    /// `f(2 pi j / M)` for `j = 0..M`.
    pub fn values(&self, f: &TorusFunction) -> Result<Vec<Complex64>, TorusError> {
        if self.m < 2 * f.degree() + 1 {
            return Err(TorusError::Grid(format!("grid of {} points aliases degree {}", self.m, f.degree())));
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); self.m];
        for (n, c) in f.terms() {
            buf[n.rem_euclid(self.m as i64) as usize] = c;
        }
        self.inverse.process(&mut buf);
        Ok(buf)
    }

    /// Recovers coefficients of degree `degree` from grid values.
    pub fn coefficients(&self, values: &[Complex64], degree: usize) -> Result<TorusFunction, TorusError> {
        if values.len() != self.m || self.m < 2 * degree + 1 {
            return Err(TorusError::Grid("value count does not match the grid".into()));
        }
        let mut buf = values.to_vec();
        self.forward.process(&mut buf);
        let scale = 1.0 / self.m as f64;
        let dense = (-(degree as i64)..=degree as i64)
            .map(|n| buf[n.rem_euclid(self.m as i64) as usize] * scale)
            .collect();
        TorusFunction::from_dense(degree, dense)
    }

    /// Mean of `g` over the grid values.
    fn mean(&self, g: impl Fn(usize) -> f64 + Sync) -> f64 {
        let chunks = self.m.div_ceil(CHUNK);
        let partial: Vec<f64> = (0..chunks)
            .into_par_iter()
            .map(|c| (c * CHUNK..((c + 1) * CHUNK).min(self.m)).map(&g).sum::<f64>())
            .collect();
        partial.iter().sum::<f64>() / self.m as f64
    }

    pub fn lp_norm(&self, f: &TorusFunction, p: f64) -> Result<f64, TorusError> {
        check_p(p)?;
        self.check(f)?;
        let v = self.values(f)?;
        Ok(self.mean(|j| v[j].norm_sqr().powf(p / 2.0)).powf(1.0 / p))
    }

    /// `|| (|P+ f|^s + |P- f|^s)^(1/s) ||_p`.
    pub fn mixed_norm(&self, f: &TorusFunction, s: f64, p: f64) -> Result<f64, TorusError> {
        check_p(p)?;
        if !(s > 0.0 && s.is_finite()) {
            return Err(TorusError::Domain(format!("mixing exponent must be positive, got {s}")));
        }
        self.check(f)?;
        let plus = self.values(&f.project(Part::Plus))?;
        let minus = self.values(&f.project(Part::Minus))?;
        Ok(self.mean(|j| mix(plus[j].norm(), minus[j].norm(), s).powf(p)).powf(1.0 / p))
    }

    /// Both norms and both ratios of `f` at `pair`.
    pub fn report(&self, f: &TorusFunction, pair: &ExponentPair) -> Result<NormReport, TorusError> {
        let (p, s) = (pair.p, pair.s);
        check_p(p)?;
        if !(s > 0.0 && s.is_finite()) {
            return Err(TorusError::Domain(format!("mixing exponent must be positive, got {s}")));
        }
        self.check(f)?;
        if f.is_zero() {
            return Err(TorusError::ZeroFunction);
        }
        // f = P+ f + P- f pointwise, so two transforms give everything
        let plus = self.values(&f.project(Part::Plus))?;
        let minus = self.values(&f.project(Part::Minus))?;
        let lp = self.mean(|j| (plus[j] + minus[j]).norm_sqr().powf(p / 2.0)).powf(1.0 / p);
        let mixed = self.mean(|j| mix(plus[j].norm(), minus[j].norm(), s).powf(p)).powf(1.0 / p);
        if !(lp > 0.0 && mixed > 0.0) {
            return Err(TorusError::ZeroFunction);
        }
        Ok(NormReport {
            p,
            s,
            lp_norm_f: lp,
            mixed_norm: mixed,
            ratio_forward: mixed / lp,
            ratio_reverse: lp / mixed,
            grid_size: self.m,
        })
    }
}

/// `(a^s + b^s)^(1/s)` for `a, b >= 0`, scaled to avoid overflow.
fn mix(a: f64, b: f64, s: f64) -> f64 {
    let big = a.max(b);
    if big == 0.0 {
        return 0.0;
    }
    big * ((a / big).powf(s) + (b / big).powf(s)).powf(1.0 / s)
}

fn check_p(p: f64) -> Result<(), TorusError> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(TorusError::Domain(format!("p must be at least 1, got {p}")));
    }
    Ok(())
}

/// `||f||_p` on a grid of `m` points.
pub fn lp_norm(f: &TorusFunction, p: f64, m: usize) -> Result<f64, TorusError> {
    TorusGrid::new(m)?.lp_norm(f, p)
}

/// Mixed norm `|| (|P+ f|^s + |P- f|^s)^(1/s) ||_p` on a grid of `m` points.
pub fn mixed_norm(f: &TorusFunction, s: f64, p: f64, m: usize) -> Result<f64, TorusError> {
    TorusGrid::new(m)?.mixed_norm(f, s, p)
}

/// Mixed norm over `L^p` norm; bounded by the forward constant for `p` in (1, 2].
pub fn ratio_forward(f: &TorusFunction, pair: &ExponentPair, m: usize) -> Result<f64, TorusError> {
    Ok(TorusGrid::new(m)?.report(f, pair)?.ratio_forward)
}

/// `L^p` norm over mixed norm; bounded by the reverse constant for `p` in [2, 4).
pub fn ratio_reverse(f: &TorusFunction, pair: &ExponentPair, m: usize) -> Result<f64, TorusError> {
    Ok(TorusGrid::new(m)?.report(f, pair)?.ratio_reverse)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormReport {
    pub p: f64,
    pub s: f64,
    pub lp_norm_f: f64,
    pub mixed_norm: f64,
    pub ratio_forward: f64,
    pub ratio_reverse: f64,
    pub grid_size: usize,
}
