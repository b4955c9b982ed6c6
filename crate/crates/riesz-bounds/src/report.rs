//! Persistent outputs: certificate JSON, run status, and the text report
//! built from a directory of earlier outputs.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::Value;

use crate::certifier::{Certificate, Verdict};
use crate::functions::{find_claim, Expected};

/// Process exit codes shared by the command-line tools.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    /// A claim was refuted (or proved) against expectation, a ratio exceeded
    /// its constant, or a certificate names an unknown claim.
    Violation = 1,
    Inconclusive = 2,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The more serious of two statuses; a violation outranks inconclusive.
    pub fn worst(self, other: Status) -> Status {
        let rank = |s: Status| match s {
            Status::Success => 0,
            Status::Inconclusive => 1,
            Status::Violation => 2,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

fn judge(verdict: Verdict, expected: Expected) -> Status {
    match (verdict, expected) {
        (Verdict::Proved, Expected::Proved) | (Verdict::Refuted, Expected::Refuted) => Status::Success,
        (Verdict::Inconclusive, _) => Status::Inconclusive,
        _ => Status::Violation,
    }
}

/// Status of a batch. `expect` overrides each certificate's own expectation.
pub fn status(certs: &[Certificate], expect: Option<Expected>) -> Status {
    certs.iter().fold(Status::Success, |acc, c| {
        acc.worst(judge(c.verdict, expect.or(c.expected).unwrap_or(Expected::Proved)))
    })
}

/// Certificates as a pretty JSON array. In stable mode the wall-clock and
/// version fields are dropped so that reruns compare byte for byte.
pub fn certificates_json(certs: &[Certificate], stable: bool) -> String {
    let mut v = serde_json::to_value(certs).expect("certificates serialize");
    if stable {
        strip_unstable(&mut v);
    }
    serde_json::to_string_pretty(&v).expect("json value prints") + "\n"
}

fn strip_unstable(v: &mut Value) {
    if let Value::Array(items) = v {
        for item in items {
            if let Value::Object(m) = item {
                m.remove("elapsed_ms");
                m.remove("tool_version");
            }
        }
    }
}

/// One certificate as read back from disk.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportEntry {
    pub file: String,
    pub claim_id: String,
    pub p: Option<f64>,
    pub s: Option<f64>,
    pub verdict: Option<Verdict>,
    pub expected: Expected,
    /// `None` when the id is not in the catalog.
    pub citation: Option<&'static str>,
}

/// Summary of a ratio-scan CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanSummary {
    pub file: String,
    pub rows: usize,
    pub min_margin: f64,
    /// Rows whose margin is below `-1e-9`.
    pub violations: usize,
}

/// Summary of an extremal search or sweep file.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchSummary {
    pub file: String,
    pub p: f64,
    pub s: f64,
    pub best_ratio: f64,
    pub constant: f64,
    pub ceiling_violations: u64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub certificates: Vec<ReportEntry>,
    pub scans: Vec<ScanSummary>,
    pub searches: Vec<SearchSummary>,
    /// Files that could not be read or were not recognized.
    pub skipped: Vec<String>,
}

/// Ratio margins below this count as violations in a scan file.
pub const MARGIN_TOLERANCE: f64 = 1e-9;

impl Report {
    /// Reads every `.json` and `.csv` file directly inside `dir`, in name order.
    pub fn from_dir(dir: &Path) -> std::io::Result<Report> {
        let mut names: Vec<_> = fs::read_dir(dir)?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        names.sort();
        let mut report = Report::default();
        for path in names {
            let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let text = match fs::read_to_string(&path) {
                Ok(t) => t,
                Err(_) => {
                    report.skipped.push(name);
                    continue;
                }
            };
            let ok = match path.extension().and_then(|e| e.to_str()) {
                Some("json") => report.add_json(&name, &text),
                Some("csv") => report.add_csv(&name, &text),
                _ => continue,
            };
            if !ok {
                report.skipped.push(name);
            }
        }
        Ok(report)
    }

    fn add_json(&mut self, file: &str, text: &str) -> bool {
        let Ok(v) = serde_json::from_str::<Value>(text) else {
            return false;
        };
        let items = match v {
            Value::Array(items) => items,
            other => vec![other],
        };
        let mut any = false;
        for item in &items {
            if let Some(id) = item.get("claim_id").and_then(Value::as_str) {
                let claim = find_claim(id);
                let expected = item
                    .get("expected")
                    .and_then(|e| serde_json::from_value(e.clone()).ok())
                    .or(claim.as_ref().map(|c| c.expected))
                    .unwrap_or(Expected::Proved);
                self.certificates.push(ReportEntry {
                    file: file.to_string(),
                    claim_id: id.to_string(),
                    p: item.get("p").and_then(Value::as_f64),
                    s: item.get("s").and_then(Value::as_f64),
                    verdict: item.get("verdict").and_then(|v| serde_json::from_value(v.clone()).ok()),
                    expected,
                    citation: claim.map(|c| c.citation),
                });
                any = true;
            } else if let Some(best) = item.get("best_ratio").and_then(Value::as_f64) {
                let num = |k: &str| item.get(k).and_then(Value::as_f64);
                let (Some(p), Some(s)) = (num("p"), num("s")) else { continue };
                self.searches.push(SearchSummary {
                    file: file.to_string(),
                    p,
                    s,
                    best_ratio: best,
                    constant: num("constant").or(num("C")).unwrap_or(f64::NAN),
                    ceiling_violations: item.get("ceiling_violations").and_then(Value::as_u64).unwrap_or(0),
                });
                any = true;
            }
        }
        any
    }

    fn add_csv(&mut self, file: &str, text: &str) -> bool {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let Ok(headers) = r.headers().cloned() else { return false };
        let Some(col) = headers.iter().position(|h| h == "margin") else { return false };
        let mut summary = ScanSummary { file: file.to_string(), rows: 0, min_margin: f64::INFINITY, violations: 0 };
        for rec in r.records() {
            let Ok(rec) = rec else { return false };
            let Some(m) = rec.get(col).and_then(|m| m.parse::<f64>().ok()) else { return false };
            summary.rows += 1;
            summary.min_margin = summary.min_margin.min(m);
            if m < -MARGIN_TOLERANCE {
                summary.violations += 1;
            }
        }
        self.scans.push(summary);
        true
    }

    pub fn status(&self) -> Status {
        let mut st = Status::Success;
        for c in &self.certificates {
            st = st.worst(match (c.verdict, c.citation) {
                (_, None) | (None, _) => Status::Violation,
                (Some(v), _) => judge(v, c.expected),
            });
        }
        if self.scans.iter().any(|s| s.violations > 0) || self.searches.iter().any(|s| s.ceiling_violations > 0) {
            st = Status::Violation;
        }
        st
    }

    /// Plain-text rendering, one line per certificate.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v}"));
        if !self.certificates.is_empty() {
            let _ = writeln!(out, "Certificates");
            let _ = writeln!(out, "{:<12} {:<8} {:<8} {:<13} {:<9} citation", "claim", "p", "s", "verdict", "expected");
            for c in &self.certificates {
                let verdict = c.verdict.map_or("?", verdict_name);
                let expected = match c.expected {
                    Expected::Proved => "proved",
                    Expected::Refuted => "refuted",
                };
                let _ = writeln!(
                    out,
                    "{:<12} {:<8} {:<8} {:<13} {:<9} {}",
                    c.claim_id,
                    fmt(c.p),
                    fmt(c.s),
                    verdict,
                    expected,
                    c.citation.unwrap_or("(not in the catalog)")
                );
            }
            let count = |f: &dyn Fn(&ReportEntry) -> bool| self.certificates.iter().filter(|c| f(c)).count();
            let met = count(&|c| c.citation.is_some() && c.verdict.is_some_and(|v| judge(v, c.expected) == Status::Success));
            let open = count(&|c| c.verdict == Some(Verdict::Inconclusive));
            let _ = writeln!(
                out,
                "{} certificates: {met} as expected, {open} inconclusive, {} unexpected\n",
                self.certificates.len(),
                self.certificates.len() - met - open
            );
        }
        if !self.scans.is_empty() {
            let _ = writeln!(out, "Ratio scans");
            for s in &self.scans {
                let _ = writeln!(out, "{}: {} rows, min margin {:.3e}, {} violations", s.file, s.rows, s.min_margin, s.violations);
            }
            out.push('\n');
        }
        if !self.searches.is_empty() {
            let _ = writeln!(out, "Extremal searches");
            for s in &self.searches {
                let _ = writeln!(
                    out,
                    "{}: p={} s={} best ratio {:.6} of C = {:.6} (fraction {:.4}), {} ceiling violations",
                    s.file,
                    s.p,
                    s.s,
                    s.best_ratio,
                    s.constant,
                    s.best_ratio / s.constant,
                    s.ceiling_violations
                );
            }
            out.push('\n');
        }
        if !self.skipped.is_empty() {
            let _ = writeln!(out, "Skipped: {}", self.skipped.join(", "));
        }
        if out.is_empty() {
            out.push_str("nothing to report\n");
        }
        out
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Proved => "proved",
        Verdict::Refuted => "refuted",
        Verdict::Inconclusive => "inconclusive",
    }
}
