//! Certification plans that go through an identity instead of bisecting the
//! claimed function itself.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{run_direct, CertError, Certificate, CertifierConfig, Counterexample, Job, Verdict};
use crate::functions::{
    lemma_poly, lemma_poly_a, lemma_poly_h, Assertion, BoundaryRule, CatalogFn, ClaimInstance, FnId, Side,
};
use crate::interval::{IBox, Interval};

const IDENTITY_POINTS: usize = 2000;
const SCAN: [usize; 3] = [64, 9, 9];

/// `L(r, p, s) = (p - 2) A(r, s) - 4a r^(2+a) H(a, r)` with `a = s - 1`.
///
/// `A >= 0` on [0, 1]; `H(1, r) = 0` and `dH/da` has the sign of
/// `m(r^(2a))`, so once `m >= 0` is certified `H` is nonnegative for
/// `s >= 2` and nonpositive for `1 < s <= 2`. Each branch of the claim then
/// reduces to the sign of `(p - 2) A` on the box.
///
/// Near `r = 1` every term of `L` vanishes to third order, which defeats
/// direct bisection; the split moves that zero into `m` at `u = 1`, where a
/// face rule handles it.
pub(crate) fn lemma_poly_split(inst: &ClaimInstance, cfg: &CertifierConfig) -> Result<Certificate, CertError> {
    let start = Instant::now();
    let claim = &inst.claim;
    if claim.fn_id != FnId::LemmaPoly {
        return Err(CertError::Domain(format!("{}: split plan applies to lemma_poly only", claim.id)));
    }
    let sign = claim.assertion.sign();
    let dom = &claim.domain;
    let (r, s) = (dom.0[0], dom.0[2]);
    if claim.assertion.derivative_order() != 0 || r.lo() < 0.0 || r.hi() > 1.0 {
        return Err(CertError::Domain(format!("{}: split plan needs a sign claim with r in [0, 1]", claim.id)));
    }
    let branch_ok = if sign < 0.0 { s.lo() >= 2.0 } else { s.lo() > 1.0 && s.hi() <= 2.0 };
    let mut exceptions = vec![format!(
        "split L = (p-2) A - 4a r^(2+a) H(a, r), a = s - 1: H >= 0 for s >= 2 and H <= 0 for s <= 2 since H(1, r) = 0 and dH/da = r^-a m(r^(2a)) / (2a^2)"
    )];
    if !branch_ok {
        exceptions.push(format!("s range {s} does not fix the sign of H for this assertion"));
    }

    let p_term = CatalogFn { fn_id: FnId::LemmaPolyPTerm, pair: None };
    let job = Job {
        id: claim.id,
        f: &p_term,
        domain: dom.clone(),
        assertion: claim.assertion,
        rules: &[],
        pair: None,
        expected: None,
    };
    let c_term = run_direct(&job, cfg)?;
    exceptions.push(format!("(p-2) A certified {:?}: {:?} in {} boxes", claim.assertion, c_term.verdict, c_term.boxes_processed));

    let m_fn = CatalogFn { fn_id: FnId::LemmaM, pair: None };
    let m_rules = [BoundaryRule::FaceZero {
        var: 0,
        side: Side::Hi,
        at: (1, 1),
        order: 3,
        fact: "m(1) = m'(1) = m''(1) = 0",
    }];
    let m_job = Job {
        id: "m",
        f: &m_fn,
        domain: IBox(vec![Interval::new(0.0, 1.0).expect("unit interval")]),
        assertion: Assertion::Nonnegative,
        rules: &m_rules,
        pair: None,
        expected: None,
    };
    let c_m = run_direct(&m_job, &CertifierConfig { record_leaves: false, ..cfg.clone() })?;
    exceptions.push(format!("m >= 0 on [0, 1]: {:?} in {} boxes", c_m.verdict, c_m.boxes_processed));
    exceptions.extend(c_m.exceptions.iter().map(|e| format!("m: {e}")));

    let identity_ok = check_identity(dom);
    if !identity_ok {
        exceptions.push("split identity failed its floating spot check".into());
    }
    let witness = scan(dom, sign, cfg.tolerance);

    let verdict = if witness.is_some() {
        Verdict::Refuted
    } else if branch_ok && identity_ok && c_term.verdict == Verdict::Proved && c_m.verdict == Verdict::Proved {
        Verdict::Proved
    } else {
        Verdict::Inconclusive
    };
    // L(1, p, s) = 0, so the extreme value is exactly 0 once the sign is proved
    let min_enclosure = match (&witness, verdict) {
        (Some(w), _) => Interval::new(w.value.min(0.0), w.value.max(0.0)).unwrap_or_else(|_| Interval::entire()),
        (None, Verdict::Proved) => Interval::point(0.0),
        _ => Interval::entire(),
    };
    Ok(Certificate {
        claim_id: claim.id.to_string(),
        p: None,
        s: None,
        domain: dom.clone(),
        assertion: claim.assertion,
        verdict,
        boxes_processed: c_term.boxes_processed + c_m.boxes_processed,
        max_depth_reached: c_term.max_depth_reached.max(c_m.max_depth_reached),
        counterexample: witness,
        min_enclosure,
        tolerance: cfg.tolerance,
        elapsed_ms: start.elapsed().as_millis() as u64,
        tool_version: super::TOOL_VERSION.to_string(),
        exceptions,
        expected: Some(claim.expected),
        error: None,
        leaves: c_term.leaves,
    })
}

/// Compares `L` with the split form at seeded random points.
fn check_identity(dom: &IBox) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pick = |rng: &mut ChaCha8Rng, side: Interval| {
        if side.width() == 0.0 {
            side.lo()
        } else {
            rng.random_range(side.lo()..=side.hi())
        }
    };
    (0..IDENTITY_POINTS).all(|_| {
        let r = pick(&mut rng, dom.0[0]).max(1e-3);
        let p = pick(&mut rng, dom.0[1]);
        let s = pick(&mut rng, dom.0[2]);
        let a = s - 1.0;
        let lhs = lemma_poly(r, p, s);
        let rhs = (p - 2.0) * lemma_poly_a(r, s) - 4.0 * a * r.powf(2.0 + a) * lemma_poly_h(a, r);
        (lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs())
    })
}

/// Floating grid scan for a violation, confirmed in interval arithmetic.
fn scan(dom: &IBox, sign: f64, tol: f64) -> Option<Counterexample> {
    let at = |side: Interval, i: usize, n: usize| side.lo() + (side.hi() - side.lo()) * i as f64 / (n - 1) as f64;
    for i in 0..SCAN[0] {
        for j in 0..SCAN[1] {
            for k in 0..SCAN[2] {
                let x = [at(dom.0[0], i, SCAN[0]), at(dom.0[1], j, SCAN[1]), at(dom.0[2], k, SCAN[2])];
                let v = lemma_poly(x[0], x[1], x[2]);
                if sign * v < -tol {
                    let iv = lemma_poly(Interval::point(x[0]), Interval::point(x[1]), Interval::point(x[2]));
                    let h = if sign < 0.0 { -iv } else { iv };
                    if h.is_valid() && h.hi() < 0.0 {
                        return Some(Counterexample { point: x.to_vec(), value: v });
                    }
                }
            }
        }
    }
    None
}
