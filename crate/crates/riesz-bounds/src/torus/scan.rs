use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{TorusError, TorusFunction, TorusGrid};
use crate::functions::{sharp_constant_forward, sharp_constant_reverse, ExponentPair};

/// A random trigonometric polynomial of degree `degree` with unit `L^2` norm.
///
/// A ChaCha8 stream seeded with `seed` supplies, for `n = -N, ..., N` in
/// order, the real and then the imaginary part of `c_n`, each uniform on
/// [-1, 1). The coefficients are then scaled to unit `l2` norm.
pub fn random_polynomial(degree: usize, seed: u64) -> TorusFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Complex64> = (0..2 * degree + 1)
        .map(|_| {
            let re = rng.random_range(-1.0..1.0);
            let im = rng.random_range(-1.0..1.0);
            Complex64::new(re, im)
        })
        .collect();
    let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        coeffs.iter_mut().for_each(|c| *c /= norm);
    } else {
        coeffs[degree] = Complex64::new(1.0, 0.0);
    }
    TorusFunction::from_dense(degree, coeffs).expect("finite coefficients")
}

/// One random trial of the ratio scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub seed: u64,
    #[serde(rename = "N")]
    pub degree: usize,
    pub p: f64,
    pub s: f64,
    pub lp_norm: f64,
    pub mixed_norm: f64,
    pub ratio_forward: f64,
    pub ratio_reverse: f64,
    #[serde(rename = "C_forward")]
    pub c_forward: Option<f64>,
    #[serde(rename = "C_reverse")]
    pub c_reverse: Option<f64>,
    /// Constant minus ratio for the estimate that applies at `p`; negative
    /// would contradict the sharp estimate.
    pub margin: f64,
}

/// Ratios of `trials` random polynomials at each conjugate pair.
///
/// Trial `k` uses `random_polynomial(degree, seed + k)`.
pub fn scan_ratios(
    p_values: &[f64],
    trials: usize,
    degree: usize,
    seed: u64,
    grid_size: usize,
) -> Result<Vec<ScanRow>, TorusError> {
    let grid = TorusGrid::new(grid_size)?;
    let mut rows = Vec::with_capacity(p_values.len() * trials);
    for &p in p_values {
        let pair = ExponentPair::conjugate(p).map_err(|e| TorusError::Domain(e.to_string()))?;
        let cf = sharp_constant_forward(&pair).ok();
        let cr = sharp_constant_reverse(&pair).ok();
        if cf.is_none() && cr.is_none() {
            return Err(TorusError::Domain(format!("no sharp constant applies at p = {p}")));
        }
        let batch: Result<Vec<ScanRow>, TorusError> = (0..trials as u64)
            .into_par_iter()
            .map(|k| {
                let trial_seed = seed.wrapping_add(k);
                let f = random_polynomial(degree, trial_seed);
                let r = grid.report(&f, &pair)?;
                let margins = [cf.map(|c| c - r.ratio_forward), cr.map(|c| c - r.ratio_reverse)];
                let margin = margins.iter().flatten().copied().fold(f64::INFINITY, f64::min);
                Ok(ScanRow {
                    seed: trial_seed,
                    degree,
                    p,
                    s: pair.s,
                    lp_norm: r.lp_norm_f,
                    mixed_norm: r.mixed_norm,
                    ratio_forward: r.ratio_forward,
                    ratio_reverse: r.ratio_reverse,
                    c_forward: cf,
                    c_reverse: cr,
                    margin,
                })
            })
            .collect();
        rows.extend(batch?);
    }
    Ok(rows)
}

pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<(), TorusError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| TorusError::Format(e.to_string()))?;
    }
    w.flush().map_err(|e| TorusError::Format(e.to_string()))
}
