//! Acceptance suite: one test per release criterion, each with a wall-clock
//! budget. Run `cargo test --test acceptance -- --nocapture` to see one
//! [PASS]/[FAIL] line per criterion.

use std::time::Duration;

use fpd::verify::{
    check_a_family, check_d_family, check_e_family, check_oracle_agreement, check_property_suite,
    check_qnm_family, check_reversed_a3, check_small_case_matrices, CriterionReport, Scope,
};

fn finish(report: CriterionReport, budget: Duration) {
    println!("{}", report.summary_line());
    for c in report.checks.iter().filter(|c| !c.passed) {
        println!("  failed: {}: {}", c.name, c.detail);
    }
    assert!(report.passed(), "criterion failed: {}", report.name);
    assert!(
        report.elapsed <= budget,
        "{} took {:.2}s, budget {:.2}s",
        report.name,
        report.elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
}

#[test]
fn criterion_1_modified_a_grids() {
    finish(check_a_family(Scope::Full), Duration::from_secs(10));
}

#[test]
fn criterion_2_modified_d_grids() {
    finish(check_d_family(Scope::Full), Duration::from_secs(10));
}

#[test]
fn criterion_3_modified_e_grids() {
    finish(check_e_family(Scope::Full), Duration::from_secs(30));
}

#[test]
fn criterion_4_two_vertex_cycle_grid() {
    finish(check_qnm_family(Scope::Full), Duration::from_secs(5));
}

#[test]
fn criterion_5_reversed_a3_grid_and_sets() {
    finish(check_reversed_a3(Scope::Full), Duration::from_secs(5));
}

#[test]
fn criterion_6_finite_field_oracle_agreement() {
    finish(check_oracle_agreement(), Duration::from_secs(60));
}

#[test]
fn criterion_7_frozen_small_case_matrices() {
    finish(check_small_case_matrices(), Duration::from_secs(10));
}

#[test]
fn criterion_8_homological_property_suite() {
    finish(check_property_suite(Scope::Full), Duration::from_secs(60));
}
