//! Breadth-first branch and bound for `h >= 0` on a box.
//!
//! Boxes are processed in waves. Each wave is evaluated in parallel and then
//! folded sequentially in wave order, and children are appended left before
//! right, so the outcome does not depend on the number of worker threads.

use rayon::prelude::*;

use super::CertifierConfig;
use crate::functions::{derivative_along, ScalarFn};
use crate::interval::{IBox, Interval};

/// `sign * d^order g / d x_var^order` for a [`ScalarFn`] `g`: the quantity
/// whose nonnegativity is being certified.
pub(crate) struct Lowered<'a, F: ScalarFn> {
    pub f: &'a F,
    pub order: u32,
    pub var: usize,
    pub sign: f64,
}

impl<F: ScalarFn> Lowered<'_, F> {
    pub fn value_f64(&self, x: &[f64]) -> f64 {
        self.sign * derivative_along(self.f, self.order, self.var, x)
    }

    pub fn value_iv(&self, x: &[Interval]) -> Interval {
        let v = derivative_along(self.f, self.order, self.var, x);
        if self.sign < 0.0 {
            -v
        } else {
            v
        }
    }

    fn gradient_iv(&self, x: &[Interval]) -> Vec<Interval> {
        let n = x.len();
        let g: Vec<Interval> = if n == 1 {
            vec![derivative_along(self.f, self.order + 1, 0, x)]
        } else {
            debug_assert_eq!(self.order, 0, "derivatives are lowered only in one variable");
            (0..n).map(|i| derivative_along(self.f, 1, i, x)).collect()
        };
        if self.sign < 0.0 {
            g.into_iter().map(|v| -v).collect()
        } else {
            g
        }
    }

    /// Natural enclosure intersected with the mean-value form.
    pub fn enclose(&self, b: &IBox) -> Interval {
        let natural = self.value_iv(&b.0);
        if !natural.is_valid() || self.order + 1 > crate::functions::MAX_DERIVATIVE_ORDER {
            return natural;
        }
        let c: Vec<Interval> = b.midpoint().into_iter().map(Interval::point).collect();
        let grad = self.gradient_iv(&b.0);
        if grad.iter().any(|g| !g.is_valid() || g.is_unbounded()) {
            return natural;
        }
        let mut mv = self.value_iv(&c);
        for ((g, side), ci) in grad.iter().zip(&b.0).zip(&c) {
            mv = mv + *g * (*side - *ci);
        }
        if !mv.is_valid() {
            return natural;
        }
        natural.intersect(&mv).unwrap_or(natural)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Witness {
    pub point: Vec<f64>,
    /// Floating value of `h` at the point.
    pub value: f64,
    /// Interval value of `h` at the point, entirely negative.
    pub enclosure: Interval,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct SearchOutcome {
    pub boxes: u64,
    pub max_depth: u32,
    pub witness: Option<Witness>,
    /// Boxes left undetermined because of the depth or box budget.
    pub stuck: u64,
    /// Lower bound of `min h` over the accepted leaves.
    pub min_lo: f64,
    /// Upper bound of `min h` over the accepted leaves.
    pub min_hi: f64,
    pub leaves: Option<Vec<IBox>>,
    pub excluded_leaves: u64,
}

impl SearchOutcome {
    pub fn proved(&self) -> bool {
        self.witness.is_none() && self.stuck == 0
    }
}

enum Step {
    Accept(f64, f64),
    Excluded,
    Refute(Witness),
    Split(IBox, IBox),
    Stuck(Interval),
}

/// Sample points for the witness probe: the centre, then a deterministic
/// low-discrepancy sequence.
fn probe_points(b: &IBox, count: u32) -> Vec<Vec<f64>> {
    const STEPS: [f64; 4] = [0.618_033_988_749_894_9, 0.754_877_666_246_692_7, 0.569_840_290_998_053_3, 0.438_195_642_652_5];
    (0..count.max(1))
        .map(|j| {
            b.0.iter()
                .enumerate()
                .map(|(i, side)| {
                    if j == 0 {
                        return side.mid();
                    }
                    let frac = (0.5 + j as f64 * STEPS[i % STEPS.len()]).fract();
                    let x = side.lo() + frac * (side.hi() - side.lo());
                    x.clamp(side.lo(), side.hi())
                })
                .collect()
        })
        .collect()
}

fn step<F: ScalarFn>(h: &Lowered<F>, b: &IBox, depth: u32, excluded: &[IBox], cfg: &CertifierConfig, scale: &[f64]) -> Step {
    if excluded.iter().any(|e| b.is_subset(e)) {
        return Step::Excluded;
    }
    let enc = h.enclose(b);
    if enc.is_valid() && enc.lo() >= cfg.strictness_margin {
        // the value at the centre bounds the minimum from above
        let c: Vec<Interval> = b.midpoint().into_iter().map(Interval::point).collect();
        let at = h.value_iv(&c);
        let hi = if at.is_valid() { at.hi().min(enc.hi()) } else { enc.hi() };
        return Step::Accept(enc.lo(), hi);
    }
    for x in probe_points(b, cfg.midpoint_sampling) {
        if excluded.iter().any(|e| e.contains_point(&x)) {
            continue;
        }
        let v = h.value_f64(&x);
        let entirely_negative = enc.is_valid() && enc.hi() < 0.0;
        if v < -cfg.tolerance || entirely_negative {
            let pts: Vec<Interval> = x.iter().map(|&xi| Interval::point(xi)).collect();
            let at = h.value_iv(&pts);
            if at.is_valid() && at.hi() < 0.0 && v < -cfg.tolerance {
                return Step::Refute(Witness { point: x, value: v, enclosure: at });
            }
        }
    }
    if depth >= cfg.max_depth {
        return Step::Stuck(enc);
    }
    let (l, r) = b.split_at_axis(b.widest_scaled(scale));
    Step::Split(l, r)
}

/// Certifies `h >= 0` on `domain`, skipping boxes inside `excluded`.
pub(crate) fn search<F: ScalarFn>(
    h: &Lowered<F>,
    domain: &IBox,
    excluded: &[IBox],
    cfg: &CertifierConfig,
    max_boxes: u64,
) -> SearchOutcome {
    let scale: Vec<f64> = domain.0.iter().map(|s| if s.width() > 0.0 { s.width() } else { 1.0 }).collect();
    let mut out = SearchOutcome {
        min_lo: f64::INFINITY,
        min_hi: f64::INFINITY,
        leaves: cfg.record_leaves.then(Vec::new),
        ..Default::default()
    };
    let mut wave: Vec<IBox> = vec![domain.clone()];
    let mut depth = 0u32;
    while !wave.is_empty() {
        if out.boxes + wave.len() as u64 > max_boxes {
            out.stuck += wave.len() as u64;
            break;
        }
        out.max_depth = depth;
        let steps: Vec<Step> = wave.par_iter().map(|b| step(h, b, depth, excluded, cfg, &scale)).collect();
        out.boxes += wave.len() as u64;
        let mut next = Vec::new();
        for (b, s) in wave.iter().zip(steps) {
            match s {
                Step::Accept(lo, hi) => {
                    out.min_lo = out.min_lo.min(lo);
                    out.min_hi = out.min_hi.min(hi);
                    if let Some(l) = out.leaves.as_mut() {
                        l.push(b.clone());
                    }
                }
                Step::Excluded => {
                    out.excluded_leaves += 1;
                    if let Some(l) = out.leaves.as_mut() {
                        l.push(b.clone());
                    }
                }
                Step::Refute(w) => {
                    if out.witness.is_none() {
                        out.min_hi = out.min_hi.min(w.enclosure.hi());
                        out.witness = Some(w);
                    }
                }
                Step::Split(l, r) => {
                    next.push(l);
                    next.push(r);
                }
                Step::Stuck(enc) => {
                    out.stuck += 1;
                    let lo = if enc.is_valid() { enc.lo() } else { f64::NEG_INFINITY };
                    out.min_lo = out.min_lo.min(lo);
                    if let Some(l) = out.leaves.as_mut() {
                        l.push(b.clone());
                    }
                }
            }
        }
        if out.witness.is_some() {
            break;
        }
        wave = next;
        depth += 1;
    }
    out
}
