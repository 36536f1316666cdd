//! Acceptance suite: one test per acceptance criterion, each delegating to
//! the named self-test suite and enforcing its time budget. Run with
//! `cargo test --test acceptance -- --nocapture` to see the per-criterion
//! lines.

use kkr::selftest::{run_named, CheckOutcome};

fn run_criterion(number: u32, names: &[&str], budget_millis: u128) {
    let mut outcomes: Vec<CheckOutcome> = Vec::new();
    for name in names {
        outcomes.push(run_named(name).unwrap_or_else(|| panic!("unknown check {name}")));
    }
    let total: u128 = outcomes.iter().map(|o| o.millis).sum();
    let passed = outcomes.iter().all(|o| o.passed);
    let label = names.join(", ");
    println!(
        "criterion {number} [{label}]: {} in {total} ms",
        if passed { "PASS" } else { "FAIL" }
    );
    for o in &outcomes {
        assert!(o.passed, "criterion {number} ({}): {}", o.name, o.detail);
    }
    assert!(
        total <= budget_millis,
        "criterion {number} took {total} ms, budget {budget_millis} ms"
    );
}

#[test]
fn criterion_1_vertex_fixture() {
    run_criterion(1, &["fixture-theorem"], 1_000);
}

#[test]
fn criterion_2_direct_scattering_fixture() {
    run_criterion(2, &["fixture-direct-scattering"], 1_000);
}

#[test]
fn criterion_3_box_ball_fixture() {
    run_criterion(3, &["fixture-box-ball"], 1_000);
}

#[test]
fn criterion_4_normal_ordering_fixture() {
    run_criterion(4, &["fixture-normal-order"], 1_000);
}

#[test]
fn criterion_5_oracle_equivalence() {
    run_criterion(5, &["oracle-equivalence"], 60_000);
}

#[test]
fn criterion_6_property_suites() {
    run_criterion(
        6,
        &["yang-baxter", "r-inverse", "r-kashiwara", "energy-bounds", "b0-independence"],
        60_000,
    );
}

#[test]
fn criterion_7_action_angle() {
    run_criterion(7, &["action-angle"], 5_000);
}

#[test]
fn criterion_8_choice_independence() {
    run_criterion(8, &["choice-independence"], 120_000);
}

#[test]
fn supporting_suites() {
    // Not tied to a numbered criterion: the independent graph-based R
    // derivation and the truncation property.
    run_criterion(0, &["r-graph-oracle", "truncation-corollary"], 60_000);
}
