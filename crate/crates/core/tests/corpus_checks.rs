//! Every fixture's expectation table must pass.

use choquet_core::corpus::{fixtures, verify_fixture};

#[test]
fn all_fixture_expectations_pass() {
    let mut failures = Vec::new();
    for f in fixtures() {
        let results = verify_fixture(&f).unwrap_or_else(|e| {
            panic!("fixture {} errored: {e}", f.name);
        });
        for r in results {
            if !r.passed {
                failures.push(format!("{} / {} [{}]: {}", r.fixture, r.label, r.source.tag(), r.detail));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "failed expectations:\n{}",
        failures.join("\n")
    );
}
