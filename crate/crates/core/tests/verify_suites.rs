//! Smoke-runs each verification suite at reduced bounds.
use ttcalc::verify::{run_suite, Config, Status};

fn small() -> Config {
    Config {
        max_weight: 5,
        param_bound: 2,
        pq_bound: 2,
        seed: 7,
        solve_budget: 20_000,
    }
}

#[test]
fn every_suite_passes_at_small_bounds() {
    for suite in ttcalc::verify::SUITE_NAMES {
        let report = run_suite(suite, &small()).unwrap();
        let bad: Vec<_> = report
            .records
            .iter()
            .filter(|r| r.status != Status::Pass)
            .collect();
        assert!(
            bad.is_empty(),
            "suite {suite} has non-pass records: {:#?}",
            bad
        );
    }
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("nonsense", &small()).is_none());
}
