//! The acceptance suite, one test per check. Tolerances are pinned
//! inside the check implementations; each test asserts the verdict and
//! surfaces the detail line on failure.

use heuristics_lab::acceptance::{self, CheckResult};

fn assert_pass(result: CheckResult) {
    assert!(
        result.passed,
        "check {} ({}) failed: {}",
        result.id, result.name, result.detail
    );
    println!("PASS [{:2}] {} — {}", result.id, result.name, result.detail);
}

#[test]
fn check_01_oracle_exactness() {
    assert_pass(acceptance::check_oracle_exactness());
}

#[test]
fn check_02_path_probability() {
    assert_pass(acceptance::check_path_probability());
}

#[test]
fn check_03_runtime_bound_oracle_scale() {
    assert_pass(acceptance::check_runtime_bound_oracle_scale());
}

#[test]
fn check_04_additive_noise_half() {
    assert_pass(acceptance::check_additive_noise_half());
}

#[test]
fn check_05_prior_noise_eps_squared() {
    assert_pass(acceptance::check_prior_noise_eps_squared());
}

#[test]
fn check_06_interesting_bit_bound() {
    assert_pass(acceptance::check_interesting_bit_bound());
}

#[test]
fn check_07_dominance_desk_scale() {
    assert_pass(acceptance::check_dominance_desk_scale());
}

#[test]
fn check_08_fp_bound() {
    assert_pass(acceptance::check_fp_bound());
}

#[test]
fn check_09_comma_drift() {
    assert_pass(acceptance::check_comma_drift());
}

#[test]
fn check_10_drift_theorem() {
    assert_pass(acceptance::check_drift_theorem());
}

#[test]
fn check_11_simple_ga() {
    assert_pass(acceptance::check_simple_ga());
}

#[test]
fn check_12_benchmark_suite() {
    assert_pass(acceptance::check_benchmark_suite());
}

#[test]
fn check_13_determinism() {
    assert_pass(acceptance::check_determinism());
}
