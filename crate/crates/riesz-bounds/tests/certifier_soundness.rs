//! A proof must survive a dense floating scan, and a refutation must come
//! with a point that really violates the claim.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riesz_bounds::certifier::{certify, default_grid, instance, verify_all, Certificate, CertifierConfig, Verdict};
use riesz_bounds::functions::{claim_catalog, derivative_along, find_claim, CatalogFn, ExponentPair, ScalarFn};

/// Floating value of the lowered function, oriented so the claim reads `>= 0`.
fn lowered(cert: &Certificate, x: &[f64]) -> f64 {
    let claim = find_claim(&cert.claim_id).unwrap();
    let pair = cert.p.zip(cert.s).map(|(p, s)| ExponentPair::new(p, s).unwrap());
    let f = CatalogFn { fn_id: claim.fn_id, pair };
    let order = cert.assertion.derivative_order();
    let v = if order == 0 { f.eval(x) } else { derivative_along(&f, order, 0, x) };
    cert.assertion.sign() * v
}

/// Worst violation over `n` uniform points and the box corners' neighbours.
fn scan(cert: &Certificate, n: usize, seed: u64) -> Option<(Vec<f64>, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dom = &cert.domain.0;
    let mut worst: Option<(Vec<f64>, f64)> = None;
    for _ in 0..n {
        let x: Vec<f64> = dom.iter().map(|iv| iv.lo() + rng.random::<f64>() * iv.width()).collect();
        let v = lowered(cert, &x);
        if v.is_finite() && v < -1e-9 * (1.0 + v.abs()) && worst.as_ref().is_none_or(|w| v < w.1) {
            worst = Some((x, v));
        }
    }
    worst
}

#[test]
fn proved_claims_survive_a_dense_scan() {
    let certs = verify_all(&claim_catalog(), &default_grid(), &CertifierConfig::default());
    let mut proved = 0;
    for (k, cert) in certs.iter().enumerate() {
        match cert.verdict {
            Verdict::Proved => {
                proved += 1;
                assert_eq!(scan(cert, 4000, k as u64), None, "{} at p = {:?}", cert.claim_id, cert.p);
            }
            Verdict::Refuted => {
                let w = cert.counterexample.as_ref().unwrap();
                assert!(cert.domain.contains_point(&w.point));
                assert!(lowered(cert, &w.point) < -cert.tolerance);
            }
            Verdict::Inconclusive => panic!("{} inconclusive: {:?}", cert.claim_id, cert.error),
        }
    }
    assert!(proved > 60, "{proved}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn forward_claims_at_random_conjugate_p(p in 1.34..1.99f64) {
        let pair = ExponentPair::conjugate(p).unwrap();
        for id in ["C2", "C12a", "C12c"] {
            let cert = certify(&instance(id, Some(pair)).unwrap(), &CertifierConfig::default()).unwrap();
            prop_assert_eq!(cert.verdict, Verdict::Proved, "{} at p = {}", id, p);
            prop_assert_eq!(scan(&cert, 500, p.to_bits()), None);
        }
    }

    #[test]
    fn reverse_claims_at_random_conjugate_p(p in 2.01..3.99f64) {
        let pair = ExponentPair::conjugate(p).unwrap();
        for id in ["C10", "C11a", "C11b"] {
            let cert = certify(&instance(id, Some(pair)).unwrap(), &CertifierConfig::default()).unwrap();
            prop_assert_eq!(cert.verdict, Verdict::Proved, "{} at p = {}", id, p);
            prop_assert_eq!(scan(&cert, 500, p.to_bits()), None);
        }
    }

    #[test]
    fn the_inequality_fails_for_large_s(s in 4.0..8.0f64) {
        // at p = 3/2 the inequality still holds at s = 3.9 and fails from s = 4 on
        let pair = ExponentPair::new(1.5, s).unwrap();
        let cert = certify(&instance("C1", Some(pair)).unwrap(), &CertifierConfig::default()).unwrap();
        prop_assert_eq!(cert.verdict, Verdict::Refuted);
        let w = cert.counterexample.as_ref().unwrap();
        prop_assert!(lowered(&cert, &w.point) < -cert.tolerance);
    }
}
