//! The claims chapter of the guide lists every catalog entry verbatim.

use riesz_bounds::functions::claim_catalog;

const CLAIMS: &str = include_str!("../../../book/src/claims.md");
const SUMMARY: &str = include_str!("../../../book/src/SUMMARY.md");

#[test]
fn every_claim_is_in_the_guide() {
    for claim in claim_catalog() {
        assert!(CLAIMS.contains(&format!("**{}**", claim.id)), "{} missing", claim.id);
        assert!(CLAIMS.contains(claim.citation), "{}: citation differs", claim.id);
    }
}

#[test]
fn summary_links_exist() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src");
    for line in SUMMARY.lines() {
        if let Some(start) = line.find("](") {
            let file = &line[start + 2..line.rfind(')').unwrap()];
            assert!(dir.join(file).is_file(), "{file}");
        }
    }
}
