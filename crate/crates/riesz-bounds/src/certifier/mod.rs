//! Sign certification of catalog claims by interval branch and bound.
//!
//! A claim is lowered to `h >= 0`, where `h` is plus or minus the function
//! (or its first or second derivative for monotonicity and convexity claims).
//! The domain is bisected until every box has an enclosure of `h` with a
//! nonnegative lower end, a probe point violates the claim, or the budget
//! runs out. The verdicts are:
//!
//! * `proved`: every leaf box was accepted, except boxes covered by a
//!   boundary rule whose exact fact is listed in `exceptions`;
//! * `refuted`: a point where the floating value violates the claim by more
//!   than the tolerance and the interval value at that point is strictly on
//!   the wrong side;
//! * `inconclusive`: the depth or box budget was exhausted.
//!
//! ```
//! use riesz_bounds::certifier::{certify, CertifierConfig, Verdict};
//! use riesz_bounds::functions::find_claim;
//!
//! let claim = find_claim("C4").unwrap();
//! let inst = &claim.instances(&[])[0];
//! let cert = certify(inst, &CertifierConfig::default()).unwrap();
//! assert_eq!(cert.verdict, Verdict::Proved);
//! ```

mod boundary;
mod plans;
mod search;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::functions::{
    Assertion, BoundaryRule, CatalogFn, Claim, ClaimInstance, ExponentPair, Expected, FnId, ParamRule, Plan,
    ScalarFn,
};
use crate::interval::{IBox, Interval};
use search::{search, Lowered, SearchOutcome};

pub const TOOL_VERSION: &str = concat!("riesz-bounds ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CertifierConfig {
    pub max_depth: u32,
    pub max_boxes: u64,
    /// Prove `h >= margin` instead of `h >= 0`.
    pub strictness_margin: f64,
    /// Probe points per undecided box.
    pub midpoint_sampling: u32,
    /// A floating violation must exceed this to count as a refutation.
    pub tolerance: f64,
    /// Inward shrink for derivative claims whose derivative is singular at an
    /// endpoint.
    pub delta: f64,
    /// Size of a dedicated thread pool; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Keep the leaf boxes in the certificate (not serialized).
    pub record_leaves: bool,
}

impl Default for CertifierConfig {
    fn default() -> Self {
        CertifierConfig {
            max_depth: 40,
            max_boxes: 10_000_000,
            strictness_margin: 0.0,
            midpoint_sampling: 1,
            tolerance: 1e-10,
            delta: 1e-9,
            workers: None,
            record_leaves: false,
        }
    }
}

impl CertifierConfig {
    pub fn validate(&self) -> Result<(), CertError> {
        if self.max_depth < 1 {
            return Err(CertError::Config("max_depth must be at least 1".into()));
        }
        if !(self.strictness_margin >= 0.0) {
            return Err(CertError::Config("strictness margin must be nonnegative".into()));
        }
        if !(self.tolerance >= 0.0) || !(self.delta >= 0.0) {
            return Err(CertError::Config("tolerance and delta must be nonnegative".into()));
        }
        if self.workers == Some(0) {
            return Err(CertError::Config("workers must be positive".into()));
        }
        Ok(())
    }

    /// Runs `f` inside a pool of `workers` threads when requested.
    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, CertError> {
        match self.workers {
            None => Ok(f()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| CertError::Config(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Proved,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub point: Vec<f64>,
    /// Floating value of the lowered function (the derivative for derived
    /// claims) at the point.
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub claim_id: String,
    pub p: Option<f64>,
    pub s: Option<f64>,
    pub domain: IBox,
    pub assertion: Assertion,
    pub verdict: Verdict,
    pub boxes_processed: u64,
    pub max_depth_reached: u32,
    pub counterexample: Option<Counterexample>,
    /// For `>=`-type claims an enclosure of the minimum of the lowered
    /// function, for `<=`-type claims an enclosure of its maximum.
    pub min_enclosure: Interval,
    pub tolerance: f64,
    pub elapsed_ms: u64,
    pub tool_version: String,
    /// Boundary facts used instead of box certification, and other notes.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exceptions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub leaves: Option<Vec<IBox>>,
}

impl Certificate {
    /// Proved as expected, or refuted where a refutation is expected.
    pub fn meets_expectation(&self) -> bool {
        matches!(
            (self.verdict, self.expected.unwrap_or(Expected::Proved)),
            (Verdict::Proved, Expected::Proved) | (Verdict::Refuted, Expected::Refuted)
        )
    }

    /// Zeroes the wall-clock field so reports can be compared byte for byte.
    pub fn stabilize(&mut self) {
        self.elapsed_ms = 0;
    }

    fn failed(id: &str, pair: Option<ExponentPair>, domain: IBox, assertion: Assertion, err: &CertError) -> Self {
        Certificate {
            claim_id: id.to_string(),
            p: pair.map(|x| x.p),
            s: pair.map(|x| x.s),
            domain,
            assertion,
            verdict: Verdict::Inconclusive,
            boxes_processed: 0,
            max_depth_reached: 0,
            counterexample: None,
            min_enclosure: Interval::entire(),
            tolerance: 0.0,
            elapsed_ms: 0,
            tool_version: TOOL_VERSION.to_string(),
            exceptions: Vec::new(),
            expected: None,
            error: Some(err.to_string()),
            leaves: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum CertError {
    #[error("no sign change: f({lo}) = {f_lo} and f({hi}) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown claim {0}")]
    UnknownClaim(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("could not certify a sign change on [{lo}, {hi}] in interval arithmetic")]
    RootNotCertified { lo: f64, hi: f64 },
}

/// Everything the engine needs about one sign problem.
pub(crate) struct Job<'a, F: ScalarFn> {
    pub id: &'a str,
    pub f: &'a F,
    pub domain: IBox,
    pub assertion: Assertion,
    pub rules: &'a [BoundaryRule],
    pub pair: Option<ExponentPair>,
    pub expected: Option<Expected>,
}

/// Certifies one claim instance, dispatching on its plan and assertion.
pub fn certify(inst: &ClaimInstance, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    cfg.validate()?;
    cfg.install(|| certify_inner(inst, cfg))?
}

/// Certifies a sign claim (`>= 0` or `<= 0`).
pub fn certify_sign(inst: &ClaimInstance, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    if inst.claim.assertion.derivative_order() != 0 {
        return Err(CertError::Domain(format!("{} is not a sign claim; use certify_derived", inst.claim.id)));
    }
    certify(inst, cfg)
}

/// Certifies a monotonicity or convexity claim through the sign of the first
/// or second derivative.
pub fn certify_derived(inst: &ClaimInstance, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    if inst.claim.assertion.derivative_order() == 0 {
        return Err(CertError::Domain(format!("{} is a sign claim; use certify_sign", inst.claim.id)));
    }
    certify(inst, cfg)
}

/// Certifies `assertion` for an arbitrary function on `domain`.
pub fn certify_objective<F: ScalarFn>(
    id: &str,
    f: &F,
    domain: &IBox,
    assertion: Assertion,
    cfg: &CertifierConfig,
) -> Result<Certificate, CertError> {
    cfg.validate()?;
    if domain.dim() != f.dim() {
        return Err(CertError::Domain(format!("box has {} sides, function takes {}", domain.dim(), f.dim())));
    }
    let job = Job { id, f, domain: domain.clone(), assertion, rules: &[], pair: None, expected: None };
    cfg.install(|| run_direct(&job, cfg))?
}

/// Rejects a missing or superfluous pair. A pair outside the claim's stated
/// range is allowed (that is how counterexamples are exhibited) and noted.
fn check_pair(claim: &Claim, pair: Option<ExponentPair>) -> Result<Option<String>, CertError> {
    match (claim.params, pair) {
        (ParamRule::None, None) => Ok(None),
        (ParamRule::None, Some(_)) => Err(CertError::Domain(format!("{} takes no exponents", claim.id))),
        (_, None) => Err(CertError::Domain(format!("{} needs an exponent pair", claim.id))),
        (ParamRule::Fixed { .. }, Some(_)) => Ok(None),
        (rule, Some(pair)) if rule.accepts(&pair) => Ok(None),
        (_, Some(pair)) => Ok(Some(format!(
            "pair (p, s) = ({}, {}) lies outside the claim's stated range",
            pair.p, pair.s
        ))),
    }
}

fn certify_inner(inst: &ClaimInstance, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    let claim = &inst.claim;
    let off_range = check_pair(claim, inst.pair)?;
    let mut cert = match claim.plan {
        Plan::Direct => {
            let f = CatalogFn { fn_id: claim.fn_id, pair: inst.pair };
            let job = Job {
                id: claim.id,
                f: &f,
                domain: claim.domain.clone(),
                assertion: claim.assertion,
                rules: &claim.boundary,
                pair: inst.pair,
                expected: Some(claim.expected),
            };
            run_direct(&job, cfg)?
        }
        Plan::LemmaPolySplit => plans::lemma_poly_split(inst, cfg)?,
    };
    if let Some(note) = off_range {
        cert.exceptions.insert(0, note);
        cert.expected = None;
    }
    Ok(cert)
}

/// Branch and bound on the lowered function, after applying boundary rules.
pub(crate) fn run_direct<F: ScalarFn>(job: &Job<F>, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    let start = Instant::now();
    let order = job.assertion.derivative_order();
    let sign = job.assertion.sign();
    if order > 0 && job.domain.dim() != 1 {
        return Err(CertError::Domain(format!("{}: derived assertions need a single variable", job.id)));
    }
    let h = Lowered { f: job.f, order, var: 0, sign };
    let mut exceptions = Vec::new();
    let mut domain = job.domain.clone();
    if order > 0 {
        domain = boundary::shrink_singular_ends(&h, &domain, cfg.delta, &mut exceptions);
    }

    let mut excluded = Vec::new();
    let mut used = 0u64;
    let mut known_zero = false;
    // boundary rules show `h >= 0` only, which says nothing about a margin
    let rules = if cfg.strictness_margin > 0.0 && !job.rules.is_empty() {
        exceptions.push("boundary rules skipped under a positive strictness margin".into());
        &[][..]
    } else {
        job.rules
    };
    for rule in rules {
        let res = match rule {
            BoundaryRule::FaceZero { var, side, at, order: k, fact } => {
                boundary::face_zero(&h, &domain, *var, *side, *at, *k, fact, cfg)
            }
            BoundaryRule::Touch { point, fact } => match &job.pair {
                Some(pair) => boundary::touch(&h, &domain, point(pair), fact),
                None => Err("touch rule needs an exponent pair".to_string()),
            },
        };
        match res {
            Ok(ex) => {
                used += ex.boxes;
                excluded.push(ex.region);
                exceptions.push(ex.note);
                known_zero = true;
            }
            Err(why) => exceptions.push(format!("boundary rule not applied: {why}")),
        }
    }

    let mut out = search(&h, &domain, &excluded, cfg, cfg.max_boxes.saturating_sub(used));
    out.boxes += used;
    let root_lo = if out.witness.is_some() { Some(h.enclose(&domain).lo()) } else { None };
    Ok(finish(job, sign, out, known_zero, root_lo, exceptions, cfg, start))
}

#[allow(clippy::too_many_arguments)]
fn finish<F: ScalarFn>(
    job: &Job<F>,
    sign: f64,
    out: SearchOutcome,
    known_zero: bool,
    root_lo: Option<f64>,
    exceptions: Vec<String>,
    cfg: &CertifierConfig,
    start: Instant,
) -> Certificate {
    let verdict = if out.witness.is_some() {
        Verdict::Refuted
    } else if out.stuck > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Proved
    };
    let (mut lo, mut hi) = (out.min_lo, out.min_hi);
    if let Some(r) = root_lo {
        lo = r;
    }
    if known_zero {
        lo = lo.min(0.0);
        hi = hi.min(0.0);
    }
    if lo.is_nan() || hi.is_nan() {
        lo = f64::NEG_INFINITY;
        hi = f64::INFINITY;
    }
    // adding 0.0 turns -0 into +0
    let (lo, hi) = if sign > 0.0 { (lo + 0.0, hi + 0.0) } else { (-hi + 0.0, -lo + 0.0) };
    let min_enclosure = Interval::new(lo, hi).unwrap_or_else(|_| Interval::entire());
    Certificate {
        claim_id: job.id.to_string(),
        p: job.pair.map(|x| x.p),
        s: job.pair.map(|x| x.s),
        domain: job.domain.clone(),
        assertion: job.assertion,
        verdict,
        boxes_processed: out.boxes,
        max_depth_reached: out.max_depth,
        counterexample: out.witness.map(|w| Counterexample { point: w.point, value: sign * w.value }),
        min_enclosure,
        tolerance: cfg.tolerance,
        elapsed_ms: start.elapsed().as_millis() as u64,
        tool_version: TOOL_VERSION.to_string(),
        exceptions,
        expected: job.expected,
        error: None,
        leaves: out.leaves,
    }
}

/// The default exponent grid: four forward and four reverse conjugate pairs.
pub fn default_grid() -> Vec<ExponentPair> {
    [1.40, 1.50, 1.75, 1.90, 2.25, 2.50, 3.00, 3.75]
        .iter()
        .map(|&p| ExponentPair::conjugate(p).expect("grid exponents exceed 1"))
        .collect()
}

/// Certifies every claim of `catalog` at every matching pair of `grid`.
///
/// Output follows catalog order, then grid order. Errors become
/// inconclusive certificates carrying the message.
pub fn verify_all(catalog: &[Claim], grid: &[ExponentPair], cfg: &CertifierConfig) -> Vec<Certificate> {
    let run = || {
        catalog
            .iter()
            .flat_map(|claim| claim.instances(grid))
            .map(|inst| {
                certify_inner(&inst, cfg).unwrap_or_else(|e| {
                    let mut c =
                        Certificate::failed(inst.claim.id, inst.pair, inst.claim.domain.clone(), inst.claim.assertion, &e);
                    c.expected = Some(inst.claim.expected);
                    c.tolerance = cfg.tolerance;
                    c
                })
            })
            .collect::<Vec<_>>()
    };
    let bad_config = |e: &CertError| {
        catalog
            .iter()
            .flat_map(|claim| claim.instances(grid))
            .map(|inst| Certificate::failed(inst.claim.id, inst.pair, inst.claim.domain.clone(), inst.claim.assertion, e))
            .collect()
    };
    if let Err(e) = cfg.validate() {
        return bad_config(&e);
    }
    cfg.install(run).unwrap_or_else(|e| bad_config(&e))
}

/// Looks up a claim instance by id and pair.
pub fn instance(id: &str, pair: Option<ExponentPair>) -> Result<ClaimInstance, CertError> {
    let claim = crate::functions::find_claim(id).ok_or_else(|| CertError::UnknownClaim(id.to_string()))?;
    let pair = match claim.params {
        ParamRule::None => None,
        ParamRule::Fixed { p, s } => Some(pair.unwrap_or(ExponentPair { p, s, conjugate: false })),
        _ => Some(pair.ok_or_else(|| CertError::Domain(format!("{id} needs an exponent pair")))?),
    };
    let inst = ClaimInstance { claim, pair };
    check_pair(&inst.claim, inst.pair)?;
    Ok(inst)
}

/// Encloses a root of a catalog function of one variable.
///
/// The root is bracketed by floating bisection, then the end signs of the
/// returned interval are confirmed in interval arithmetic, so the interval
/// contains a root of the exact function. Width is at most `tol`.
pub fn bracket_root(fn_id: FnId, interval: Interval, pair: Option<ExponentPair>, tol: f64) -> Result<Interval, CertError> {
    if fn_id.arity() != 1 {
        return Err(CertError::Domain(format!("{} takes {} variables", fn_id.name(), fn_id.arity())));
    }
    if fn_id.uses_params() && pair.is_none() {
        return Err(CertError::Domain(format!("{} needs an exponent pair", fn_id.name())));
    }
    bracket_root_fn(&CatalogFn { fn_id, pair }, interval, tol)
}

/// [`bracket_root`] for any function of one variable.
pub fn bracket_root_fn<F: ScalarFn>(f: &F, interval: Interval, tol: f64) -> Result<Interval, CertError> {
    if f.dim() != 1 {
        return Err(CertError::Domain(format!("root bracketing needs one variable, got {}", f.dim())));
    }
    if !(tol > 0.0) {
        return Err(CertError::Config("tolerance must be positive".into()));
    }
    let val = |x: f64| f.eval(&[x]);
    let ival = |x: f64| f.eval(&[Interval::point(x)]);
    let (mut a, mut b) = (interval.lo(), interval.hi());
    let (fa, fb) = (val(a), val(b));
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() && fa != 0.0 && fb != 0.0 {
        return Err(CertError::NoSignChange { lo: a, hi: b, f_lo: fa, f_hi: fb });
    }
    let neg_at_a = fa < 0.0 || (fa == 0.0 && fb > 0.0);
    // strict interval sign, in the orientation of the bracket
    let below = |x: f64| {
        let v = ival(x);
        v.is_valid() && v.hi() < 0.0
    };
    let above = |x: f64| {
        let v = ival(x);
        v.is_valid() && v.lo() > 0.0
    };
    let left_ok = |x: f64| if neg_at_a { below(x) } else { above(x) };
    let right_ok = |x: f64| if neg_at_a { above(x) } else { below(x) };

    let target = tol / 4.0;
    while b - a > target {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = val(m);
        if fm == 0.0 {
            a = m;
            b = m;
            break;
        }
        if (fm < 0.0) == neg_at_a {
            a = m;
        } else {
            b = m;
        }
    }
    // widen each end until its interval sign is certain, staying within tol
    let step = tol / 4.0;
    let (lo0, hi0) = (interval.lo(), interval.hi());
    let mut lo = a;
    let mut hi = b;
    while !left_ok(lo) {
        lo -= step;
        if hi - lo > tol || lo < lo0 {
            return Err(CertError::RootNotCertified { lo: a, hi: b });
        }
    }
    while !right_ok(hi) {
        hi += step;
        if hi - lo > tol || hi > hi0 {
            return Err(CertError::RootNotCertified { lo: a, hi: b });
        }
    }
    Interval::new(lo, hi).map_err(|_| CertError::RootNotCertified { lo, hi })
}

/// A root of the stationary equation and the value of `F` there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StationaryPoint {
    pub root: Interval,
    /// Enclosure of `F` over the whole root interval.
    pub big_f: Interval,
    pub big_f_at_mid: f64,
}

/// Encloses the stationary points of `F` in `range`.
///
/// `range` is cut into `pieces` equal parts and every part whose end values
/// of the stationary residual differ in sign is bracketed to width `tol`.
/// A root where the residual touches zero without changing sign is missed.
pub fn stationary_points(
    pair: &ExponentPair,
    range: Interval,
    pieces: usize,
    tol: f64,
) -> Result<Vec<StationaryPoint>, CertError> {
    if pieces == 0 || !(range.lo() > 0.0 && range.hi() < 1.0) {
        return Err(CertError::Domain("the range must lie inside (0, 1) and be cut at least once".into()));
    }
    let residual = CatalogFn { fn_id: FnId::StationaryResidual, pair: Some(*pair) };
    let big_f = CatalogFn { fn_id: FnId::BigF, pair: Some(*pair) };
    let (a, b) = (range.lo(), range.hi());
    let cut = |k: usize| if k == pieces { b } else { a + (b - a) * k as f64 / pieces as f64 };
    let mut out = Vec::new();
    for k in 0..pieces {
        let (lo, hi) = (cut(k), cut(k + 1));
        let (flo, fhi) = (residual.eval(&[lo]), residual.eval(&[hi]));
        // a zero at a shared cut belongs to the piece on its right
        if flo == 0.0 || flo.signum() != fhi.signum() && fhi != 0.0 {
            let root = bracket_root_fn(&residual, Interval::new(lo, hi).expect("ordered cuts"), tol)?;
            out.push(StationaryPoint {
                root,
                big_f: big_f.eval(&[root]),
                big_f_at_mid: big_f.eval(&[root.mid()]),
            });
        }
    }
    Ok(out)
}
