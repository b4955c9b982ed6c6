use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn riesz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riesz")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("riesz-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn counterexample_needs_the_expect_flag() {
    let args = ["certify", "--claim", "C1", "--p", "1.5", "--s", "4"];
    let out = riesz(&args);
    assert_eq!(code(&out), 1);
    let cert = &json(&out)[0];
    assert_eq!(cert["verdict"], "refuted");
    let point = cert["counterexample"]["point"].as_array().unwrap();
    assert!((point[0].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((point[1].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);

    let out = riesz(&[&args[..], &["--expect", "refuted"]].concat());
    assert_eq!(code(&out), 0);
}

#[test]
fn conjugate_certificate_is_stable_across_workers() {
    let dir = scratch("stable");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    let run = |path: &PathBuf, workers: &str| {
        riesz(&["--workers", workers, "certify", "--claim", "C1", "--p", "1.5", "--conjugate", "--stable-output", "--out", path.to_str().unwrap()])
    };
    assert_eq!(code(&run(&a, "1")), 0);
    assert_eq!(code(&run(&b, "2")), 0);
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["verdict"], "proved");
    assert!(v[0].get("elapsed_ms").is_none() && v[0].get("tool_version").is_none());
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exhausted_budget_exits_two() {
    let out = riesz(&["certify", "--claim", "C1", "--p", "1.5", "--conjugate", "--max-boxes", "3"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)[0]["verdict"], "inconclusive");
}

#[test]
fn usage_errors_exit_sixty_four() {
    for args in [
        &["certify", "--claim", "C1", "--p", "1.5"][..],
        &["certify", "--claim", "C99"],
        &["certify", "--claim", "C4", "--max-depth", "0"],
        &["certify", "--bogus"],
        &["frobnicate"],
        &["--workers", "0", "certify", "--list"],
        &["ratio", "--coeffs", "/nonexistent/f.json", "--p", "1.5", "--conjugate"],
        &["extremize", "--p", "3", "--conjugate", "--direction", "fwd", "--budget", "10"],
        &["scan", "--p-list", "5", "--trials", "1", "--degree", "2"],
    ] {
        assert_eq!(code(&riesz(args)), 64, "{args:?}");
    }
    assert_eq!(code(&riesz(&["--help"])), 0);
}

#[test]
fn catalog_listing() {
    let out = riesz(&["certify", "--list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["C1", "C1.demo", "C2", "C10", "C11a", "C11b", "C16"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(id)), "{id}");
    }
}

#[test]
fn ratio_of_a_monomial_is_one() {
    let dir = scratch("ratio");
    let f = dir.join("e1.json");
    fs::write(&f, r#"{"degree": 1, "coefficients": [[1, 1.0, 0.0]]}"#).unwrap();
    let out = riesz(&["ratio", "--coeffs", f.to_str().unwrap(), "--p", "1.7", "--conjugate"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert!((r["ratio_forward"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn search_scan_and_report_round_trip() {
    let dir = scratch("pipeline");
    let path = |n: &str| dir.join(n).to_str().unwrap().to_string();

    let out = riesz(&["scan", "--p-list", "1.5,3", "--trials", "5", "--degree", "4", "--grid-size", "1024", "--out", &path("scan.csv")]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(dir.join("scan.csv")).unwrap().lines().count(), 11);

    let args = ["extremize", "--p", "1.5", "--s", "3", "--degree", "4", "--budget", "400", "--seed", "3"];
    let out = riesz(&[&args[..], &["--out", &path("search.json"), "--best", &path("best.coeffs")]].concat());
    assert_eq!(code(&out), 0);
    let st: Value = serde_json::from_str(&fs::read_to_string(dir.join("search.json")).unwrap()).unwrap();
    assert_eq!(st["direction"], "forward");
    let fine = st["best_ratio_fine"].as_f64().unwrap();
    let again = riesz(&[&args[..], &["--out", &path("again.json")]].concat());
    assert_eq!(code(&again), 0);
    assert_eq!(fs::read(dir.join("search.json")).unwrap(), fs::read(dir.join("again.json")).unwrap());

    let out = riesz(&["ratio", "--coeffs", &path("best.coeffs"), "--p", "1.5", "--s", "3"]);
    assert_eq!(code(&out), 0);
    assert!((json(&out)["ratio_forward"].as_f64().unwrap() - fine).abs() < 1e-12);

    let out = riesz(&["certify", "--claim", "C4", "--out", &path("c4.json")]);
    assert_eq!(code(&out), 0);
    let out = riesz(&["report", "--in", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C4") && text.contains("1 certificates: 1 as expected"));
    assert!(text.contains("scan.csv: 10 rows"));
    assert!(text.contains("search.json: p=1.5 s=3"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn sweep_writes_a_table() {
    let dir = scratch("sweep");
    let csv = dir.join("sweep.csv");
    let out = riesz(&["extremize", "--p-list", "1.5,3", "--degree", "3", "--budget", "80", "--restarts", "2", "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("p,s,direction,C,"));
    assert_eq!(text.lines().count(), 3);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn stationary_point_of_the_forward_pair() {
    let out = riesz(&["stationary", "--p", "1.5", "--s", "3"]);
    assert_eq!(code(&out), 0);
    let pts = json(&out);
    let root = pts[0]["root"].as_array().unwrap();
    let (lo, hi) = (root[0].as_f64().unwrap(), root[1].as_f64().unwrap());
    assert!(0.53 <= lo && hi <= 0.54 && hi - lo <= 1e-10);
    assert!(pts[0]["big_f_at_mid"].as_f64().unwrap() >= 0.03);
}
