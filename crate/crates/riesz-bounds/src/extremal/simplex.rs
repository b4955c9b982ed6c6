//! Nelder-Mead maximization with dimension-adapted coefficients
//! (Gao and Han), which keeps the simplex from collapsing in the 30 to 130
//! dimensions used here.

/// Result of one run.
pub(crate) struct SimplexRun {
    pub best: Vec<f64>,
    pub best_value: f64,
    pub evaluations: u64,
    /// `(evaluation index, value)` at every strict improvement.
    pub improvements: Vec<(u64, f64)>,
}

/// Maximizes `f` from `x0` with `budget` evaluations (the start counts).
/// `step` is the initial edge length along each axis.
pub(crate) fn maximize(mut f: impl FnMut(&[f64]) -> f64, x0: &[f64], step: f64, budget: u64) -> SimplexRun {
    let n = x0.len();
    let nf = n as f64;
    let (alpha, beta, gamma, delta) = (1.0, 1.0 + 2.0 / nf, 0.75 - 1.0 / (2.0 * nf), 1.0 - 1.0 / nf);
    let mut evals = 0u64;
    let mut best = x0.to_vec();
    let mut best_value = f64::NEG_INFINITY;
    let mut improvements = Vec::new();
    let mut eval = |x: &[f64], evals: &mut u64, best: &mut Vec<f64>, best_value: &mut f64, imp: &mut Vec<(u64, f64)>| {
        let v = f(x);
        let v = if v.is_nan() { f64::NEG_INFINITY } else { v };
        if v > *best_value {
            *best_value = v;
            best.copy_from_slice(x);
            imp.push((*evals, v));
        }
        *evals += 1;
        v
    };

    let v0 = eval(x0, &mut evals, &mut best, &mut best_value, &mut improvements);
    let mut simplex: Vec<(Vec<f64>, f64)> = vec![(x0.to_vec(), v0)];
    for i in 0..n {
        if evals >= budget {
            break;
        }
        let mut x = x0.to_vec();
        x[i] += step;
        let v = eval(&x, &mut evals, &mut best, &mut best_value, &mut improvements);
        simplex.push((x, v));
    }
    if simplex.len() < n + 1 {
        return SimplexRun { best, best_value, evaluations: evals, improvements };
    }

    while evals < budget {
        // best first; the sort is stable so ties keep their order
        simplex.sort_by(|a, b| b.1.total_cmp(&a.1));
        let worst = simplex[n].1;
        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / nf;
            }
        }
        let toward = |t: f64, from: &[f64]| -> Vec<f64> {
            centroid.iter().zip(from).map(|(c, w)| c + t * (c - w)).collect()
        };
        let xr = toward(alpha, &simplex[n].0);
        let vr = eval(&xr, &mut evals, &mut best, &mut best_value, &mut improvements);
        if vr > simplex[0].1 {
            if evals >= budget {
                simplex[n] = (xr, vr);
                break;
            }
            let xe = toward(alpha * beta, &simplex[n].0);
            let ve = eval(&xe, &mut evals, &mut best, &mut best_value, &mut improvements);
            simplex[n] = if ve > vr { (xe, ve) } else { (xr, vr) };
            continue;
        }
        if vr > simplex[n - 1].1 {
            simplex[n] = (xr, vr);
            continue;
        }
        if evals >= budget {
            break;
        }
        // outside contraction when the reflection beat the worst vertex,
        // inside otherwise; either must improve on what it replaces
        let outside = vr > worst;
        let xc = toward(if outside { alpha * gamma } else { -gamma }, &simplex[n].0);
        let vc = eval(&xc, &mut evals, &mut best, &mut best_value, &mut improvements);
        if vc >= if outside { vr } else { worst } && vc > worst {
            simplex[n] = (xc, vc);
            continue;
        }
        // shrink toward the best vertex
        let x0 = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            if evals >= budget {
                break;
            }
            let x: Vec<f64> = x0.iter().zip(&vertex.0).map(|(b, w)| b + delta * (w - b)).collect();
            let v = eval(&x, &mut evals, &mut best, &mut best_value, &mut improvements);
            *vertex = (x, v);
        }
    }
    SimplexRun { best, best_value, evaluations: evals, improvements }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_the_peak_of_a_quadratic() {
        let f = |x: &[f64]| -x.iter().enumerate().map(|(i, v)| (v - i as f64).powi(2)).sum::<f64>();
        let run = maximize(f, &[5.0, 5.0, 5.0, 5.0], 1.0, 4000);
        assert!(run.best_value > -1e-8, "{}", run.best_value);
        assert!(run.evaluations <= 4000);
        assert!(run.improvements.windows(2).all(|w| w[0].1 < w[1].1 && w[0].0 < w[1].0));
    }

    #[test]
    fn rosenbrock_valley() {
        let f = |x: &[f64]| -(100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2));
        let run = maximize(f, &[-1.2, 1.0], 0.5, 3000);
        assert!((run.best[0] - 1.0).abs() < 1e-4 && (run.best[1] - 1.0).abs() < 1e-4);
    }

    #[test]
    fn zero_budget_only_scores_the_start() {
        let run = maximize(|x: &[f64]| x[0], &[2.0, 0.0], 1.0, 1);
        assert_eq!(run.evaluations, 1);
        assert_eq!(run.best_value, 2.0);
    }
}
