//! Searching for polynomials with a large mixed-norm ratio.
//!
//! The ratio is invariant under scaling and is not smooth where `f` vanishes,
//! so the search is a derivative-free simplex over the real and imaginary
//! parts of the `2N + 1` coefficients, restarted from several random
//! polynomials. Candidates are scored on a coarse search grid and the winner
//! is scored again on the default grid.
//!
//! Every scored candidate is compared against the sharp constant. A ratio
//! above it would contradict the sharp estimate, so such candidates are
//! counted in [`SearchState::ceiling_violations`] rather than discarded.

mod simplex;

use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::functions::{sharp_constant_forward, sharp_constant_reverse, ExponentPair};
use crate::torus::{default_grid_size, random_polynomial, TorusError, TorusFunction, TorusGrid};

/// Slack allowed above the sharp constant before a ratio counts as a violation.
pub const CEILING_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Mixed norm over `L^p` norm, for `p` in (1, 2].
    Forward,
    /// `L^p` norm over mixed norm, for `p` in [2, 4).
    Reverse,
}

impl Direction {
    /// Forward up to `p = 2`, reverse above.
    pub fn for_p(p: f64) -> Self {
        if p <= 2.0 {
            Direction::Forward
        } else {
            Direction::Reverse
        }
    }

    /// The sharp constant bounding this ratio at `pair`.
    pub fn constant(self, pair: &ExponentPair) -> Result<f64, TorusError> {
        let c = match self {
            Direction::Forward => sharp_constant_forward(pair),
            Direction::Reverse => sharp_constant_reverse(pair),
        };
        c.map_err(|e| TorusError::Domain(e.to_string()))
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fwd" | "forward" => Ok(Direction::Forward),
            "rev" | "reverse" => Ok(Direction::Reverse),
            _ => Err(format!("unknown direction {s:?}, expected fwd or rev")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    /// Independent simplex runs; the evaluation budget is split evenly.
    pub restarts: usize,
    /// Grid used while searching; 0 picks `max(2048, 4(N + 1))`.
    pub search_grid: usize,
    /// Grid for the final score; 0 picks [`default_grid_size`].
    pub fine_grid: usize,
    /// Initial simplex edge, relative to a unit-norm start.
    pub step: f64,
    /// Start for restart 0, zero-padded to the search degree.
    #[serde(skip)]
    pub initial: Option<TorusFunction>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { restarts: 8, search_grid: 0, fine_grid: 0, step: 0.1, initial: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchState {
    pub p: f64,
    pub s: f64,
    pub direction: Direction,
    pub degree: usize,
    pub constant: f64,
    pub best: TorusFunction,
    /// Ratio of `best` on the search grid; equal to the last history entry.
    pub best_ratio: f64,
    /// Ratio of `best` on the fine grid.
    pub best_ratio_fine: f64,
    /// Candidates scored, across all restarts.
    pub iterations: u64,
    /// `(iteration, ratio)` at every improvement of the overall best.
    /// Restart `r` owns iterations starting at `r` times its share of the budget.
    pub history: Vec<(u64, f64)>,
    pub best_restart: usize,
    pub ceiling_violations: u64,
    pub search_grid: usize,
    pub fine_grid: usize,
}

impl SearchState {
    /// `best_ratio / constant`.
    pub fn fraction(&self) -> f64 {
        self.best_ratio / self.constant
    }
}

fn to_function(x: &[f64], degree: usize) -> TorusFunction {
    let coeffs = x.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect();
    TorusFunction::from_dense(degree, coeffs).unwrap_or_else(|_| TorusFunction::zero(degree))
}

fn to_params(f: &TorusFunction) -> Vec<f64> {
    f.dense().iter().flat_map(|c| [c.re, c.im]).collect()
}

/// The chosen ratio of `f`, or `None` when it is undefined (e.g. `f = 0`).
fn score(grid: &TorusGrid, f: &TorusFunction, pair: &ExponentPair, direction: Direction) -> Option<f64> {
    let r = grid.report(f, pair).ok()?;
    let v = match direction {
        Direction::Forward => r.ratio_forward,
        Direction::Reverse => r.ratio_reverse,
    };
    v.is_finite().then_some(v)
}

struct RestartResult {
    best: Vec<f64>,
    value: f64,
    evaluations: u64,
    improvements: Vec<(u64, f64)>,
    violations: u64,
}

/// Maximizes the `direction` ratio over polynomials of degree `degree`.
///
/// Each restart scores its start even when its share of `budget` is zero, so
/// an empty budget reports the best random start. Results depend only on the
/// arguments, not on the number of threads.
pub fn maximize_ratio(
    pair: &ExponentPair,
    degree: usize,
    direction: Direction,
    budget: u64,
    seed: u64,
    cfg: &SearchConfig,
) -> Result<SearchState, TorusError> {
    let constant = direction.constant(pair)?;
    if cfg.restarts == 0 {
        return Err(TorusError::Domain("at least one restart is needed".into()));
    }
    if !(cfg.step > 0.0 && cfg.step.is_finite()) {
        return Err(TorusError::Domain(format!("simplex step must be positive, got {}", cfg.step)));
    }
    if let Some(f) = &cfg.initial {
        if f.degree() > degree || f.is_zero() {
            return Err(TorusError::Domain(format!("initial function must be nonzero of degree at most {degree}")));
        }
    }
    let search_m = if cfg.search_grid == 0 { 2048usize.max(4 * (degree + 1)).next_power_of_two() } else { cfg.search_grid };
    let fine_m = if cfg.fine_grid == 0 { default_grid_size(degree) } else { cfg.fine_grid };
    let grid = TorusGrid::new(search_m)?;
    let fine = TorusGrid::new(fine_m)?;
    if search_m < 2 * degree + 2 {
        return Err(TorusError::Grid(format!("search grid of {search_m} points is too coarse for degree {degree}")));
    }

    let share = budget / cfg.restarts as u64;
    let results: Vec<RestartResult> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let start = match (&cfg.initial, r) {
                (Some(f), 0) => f.padded(degree),
                _ => random_polynomial(degree, seed.wrapping_add(r as u64)),
            };
            let mut violations = 0u64;
            let run = simplex::maximize(
                |x| match score(&grid, &to_function(x, degree), pair, direction) {
                    Some(v) => {
                        if v > constant + CEILING_TOLERANCE {
                            violations += 1;
                        }
                        v
                    }
                    None => f64::NEG_INFINITY,
                },
                &to_params(&start),
                cfg.step,
                share.max(1),
            );
            RestartResult {
                best: run.best,
                value: run.best_value,
                evaluations: run.evaluations,
                improvements: run.improvements,
                violations,
            }
        })
        .collect();

    // restart order, then iteration order, keeps only new overall bests
    let mut history: Vec<(u64, f64)> = Vec::new();
    let mut events: Vec<(u64, f64)> = results
        .iter()
        .enumerate()
        .flat_map(|(r, res)| res.improvements.iter().map(move |&(i, v)| (r as u64 * share.max(1) + i, v)))
        .collect();
    events.sort_by_key(|e| e.0);
    for (i, v) in events {
        if history.last().is_none_or(|&(_, best)| v > best) {
            history.push((i, v));
        }
    }
    // strict comparison keeps the lowest restart index on ties
    let mut best_restart = 0;
    for (r, res) in results.iter().enumerate() {
        if res.value > results[best_restart].value {
            best_restart = r;
        }
    }
    let winner = &results[best_restart];
    if !winner.value.is_finite() {
        return Err(TorusError::ZeroFunction);
    }
    let best = to_function(&winner.best, degree);
    let best_ratio_fine = score(&fine, &best, pair, direction).ok_or(TorusError::ZeroFunction)?;
    let mut ceiling_violations: u64 = results.iter().map(|r| r.violations).sum();
    if best_ratio_fine > constant + CEILING_TOLERANCE {
        ceiling_violations += 1;
    }
    Ok(SearchState {
        p: pair.p,
        s: pair.s,
        direction,
        degree,
        constant,
        best,
        best_ratio: winner.value,
        best_ratio_fine,
        iterations: results.iter().map(|r| r.evaluations).sum(),
        history,
        best_restart,
        ceiling_violations,
        search_grid: search_m,
        fine_grid: fine_m,
    })
}

/// One row of a sweep; `error` is set instead of the numbers when the run failed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: f64,
    pub s: f64,
    pub direction: Option<Direction>,
    #[serde(rename = "C")]
    pub constant: Option<f64>,
    pub best_ratio: Option<f64>,
    pub best_ratio_fine: Option<f64>,
    pub fraction: Option<f64>,
    pub ceiling_violations: Option<u64>,
    pub error: Option<String>,
}

/// Runs [`maximize_ratio`] at the conjugate pair of each `p`, forward for
/// `p <= 2` and reverse above.
pub fn sweep(p_values: &[f64], degree: usize, budget: u64, seed: u64, cfg: &SearchConfig) -> Vec<SweepRow> {
    p_values
        .iter()
        .map(|&p| {
            let failed = |s: f64, e: String| SweepRow {
                p,
                s,
                direction: None,
                constant: None,
                best_ratio: None,
                best_ratio_fine: None,
                fraction: None,
                ceiling_violations: None,
                error: Some(e),
            };
            let pair = match ExponentPair::conjugate(p) {
                Ok(pair) => pair,
                Err(e) => return failed(f64::NAN, e.to_string()),
            };
            let direction = Direction::for_p(p);
            match maximize_ratio(&pair, degree, direction, budget, seed, cfg) {
                Ok(st) => SweepRow {
                    p,
                    s: pair.s,
                    direction: Some(direction),
                    constant: Some(st.constant),
                    best_ratio: Some(st.best_ratio),
                    best_ratio_fine: Some(st.best_ratio_fine),
                    fraction: Some(st.fraction()),
                    ceiling_violations: Some(st.ceiling_violations),
                    error: None,
                },
                Err(e) => failed(pair.s, e.to_string()),
            }
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), TorusError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| TorusError::Format(e.to_string()))?;
    }
    w.flush().map_err(|e| TorusError::Format(e.to_string()))
}

#[cfg(test)]
mod tests;
