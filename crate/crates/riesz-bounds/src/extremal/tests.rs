use super::*;
use crate::torus::ratio_forward;

fn pair(p: f64, s: f64) -> ExponentPair {
    ExponentPair::new(p, s).unwrap()
}

#[test]
fn ratio_is_constant_at_two() {
    let st = maximize_ratio(&pair(2.0, 2.0), 4, Direction::Forward, 400, 1, &SearchConfig::default()).unwrap();
    assert_eq!(st.constant, 1.0);
    assert!((st.best_ratio - 1.0).abs() < 1e-12);
    assert!((st.best_ratio_fine - 1.0).abs() < 1e-12);
    assert_eq!(st.ceiling_violations, 0);
}

#[test]
fn history_is_monotone_and_ends_at_the_best() {
    let st = maximize_ratio(&pair(1.5, 3.0), 6, Direction::Forward, 3000, 5, &SearchConfig::default()).unwrap();
    assert!(st.history.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
    assert_eq!(st.history.last().unwrap().1, st.best_ratio);
    assert!(st.iterations <= 3000);
    assert!(st.best_ratio <= st.constant + CEILING_TOLERANCE);
    assert!((st.best_ratio - st.best_ratio_fine).abs() < 1e-4);
    assert_eq!(st.ceiling_violations, 0);
}

#[test]
fn empty_budget_reports_the_best_random_start() {
    let cfg = SearchConfig::default();
    let p = pair(1.5, 3.0);
    let st = maximize_ratio(&p, 5, Direction::Forward, 0, 40, &cfg).unwrap();
    assert_eq!(st.iterations, cfg.restarts as u64);
    let starts: Vec<f64> =
        (0..cfg.restarts as u64).map(|r| ratio_forward(&random_polynomial(5, 40 + r), &p, st.search_grid).unwrap()).collect();
    let best = starts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    assert_eq!(st.best_ratio, best);
    assert_eq!(starts.iter().position(|&v| v == best), Some(st.best_restart));
}

#[test]
fn deterministic_across_thread_counts() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| maximize_ratio(&pair(3.0, 1.5), 4, Direction::Reverse, 1200, 9, &SearchConfig::default()).unwrap())
    };
    let a = run(1);
    assert_eq!(a, run(3));
    assert_eq!(a, run(1));
}

#[test]
fn nested_start_keeps_degree_monotone() {
    let p = pair(1.5, 3.0);
    let small = maximize_ratio(&p, 8, Direction::Forward, 1600, 2, &SearchConfig::default()).unwrap();
    let cfg = SearchConfig { initial: Some(small.best.clone()), ..SearchConfig::default() };
    let large = maximize_ratio(&p, 32, Direction::Forward, 1600, 2, &cfg).unwrap();
    assert_eq!(small.search_grid, large.search_grid);
    assert!(large.best_ratio >= small.best_ratio - 1e-12);
}

#[test]
fn rejects_bad_input() {
    let cfg = SearchConfig::default();
    assert!(matches!(
        maximize_ratio(&pair(3.0, 1.5), 4, Direction::Forward, 10, 0, &cfg),
        Err(TorusError::Domain(_))
    ));
    let cfg = SearchConfig { initial: Some(random_polynomial(6, 0)), ..SearchConfig::default() };
    assert!(maximize_ratio(&pair(1.5, 3.0), 4, Direction::Forward, 10, 0, &cfg).is_err());
    let cfg = SearchConfig { restarts: 0, ..SearchConfig::default() };
    assert!(maximize_ratio(&pair(1.5, 3.0), 4, Direction::Forward, 10, 0, &cfg).is_err());
    assert_eq!("rev".parse::<Direction>(), Ok(Direction::Reverse));
    assert!("up".parse::<Direction>().is_err());
}

#[test]
fn sweep_rows_and_csv() {
    let cfg = SearchConfig { restarts: 2, ..SearchConfig::default() };
    let rows = sweep(&[1.5, 3.0, 5.0], 3, 200, 4, &cfg);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].direction, Some(Direction::Forward));
    assert_eq!(rows[1].direction, Some(Direction::Reverse));
    for row in &rows[..2] {
        let f = row.fraction.unwrap();
        assert!(f > 0.0 && f <= 1.0 + 1e-9);
        assert!(row.error.is_none());
    }
    assert!(rows[2].error.is_some() && rows[2].best_ratio.is_none());
    assert_eq!(rows, sweep(&[1.5, 3.0, 5.0], 3, 200, 4, &cfg));
    let mut buf = Vec::new();
    write_sweep_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("p,s,direction,C,best_ratio,best_ratio_fine,fraction,ceiling_violations,error\n"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn state_serializes_with_coefficients() {
    let st = maximize_ratio(&pair(1.5, 3.0), 2, Direction::Forward, 50, 0, &SearchConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&st).unwrap();
    assert_eq!(v["direction"], "forward");
    assert_eq!(v["best"]["degree"], 2);
    let back = TorusFunction::from_json(&serde_json::to_string(&v["best"]).unwrap()).unwrap();
    assert_eq!(back, st.best);
}
