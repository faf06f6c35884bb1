//! Acceptance gate: twelve criteria, each printing one labeled pass/fail
//! line (run with `--nocapture` to see the lines for passing criteria).
//!
//! The criteria slice the verification suites by check-label prefix, so a
//! failure names the exact instance that broke. All suites are computed
//! once per process with a fixed seed; the reports are deterministic.

use std::sync::OnceLock;

use gridbraid::verify::{all_suites, Check, SuiteReport};

const SEED: u64 = 0xACCE55;

fn reports() -> &'static [SuiteReport] {
    static REPORTS: OnceLock<Vec<SuiteReport>> = OnceLock::new();
    REPORTS.get_or_init(|| all_suites(SEED))
}

fn suite(name: &str) -> &'static SuiteReport {
    reports()
        .iter()
        .find(|r| r.suite == name)
        .unwrap_or_else(|| panic!("no suite named {name}"))
}

fn picked(suite_name: &str, prefixes: &[&str]) -> Vec<&'static Check> {
    let checks: Vec<&Check> = suite(suite_name)
        .checks
        .iter()
        .filter(|c| prefixes.is_empty() || prefixes.iter().any(|p| c.label.starts_with(p)))
        .collect();
    assert!(!checks.is_empty(), "no checks selected from suite {suite_name} by {prefixes:?}");
    checks
}

fn assess(num: usize, title: &str, checks: &[&Check]) {
    let failures: Vec<&&Check> = checks.iter().filter(|c| !c.pass).collect();
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{verdict}] criterion {num:02}: {title} ({} checks)", checks.len());
    for c in &failures {
        println!("        [FAIL] {}: {}", c.label, c.detail);
    }
    assert!(
        failures.is_empty(),
        "criterion {num:02} failed on {} of {} checks (first: {})",
        failures.len(),
        checks.len(),
        failures[0].label
    );
}

#[test]
fn criterion_01_one_hole_complexes_are_free_of_predicted_rank() {
    assess(
        1,
        "one-hole complexes are graphs presenting free groups of rank (p-1)(q-1)",
        &picked("free-rank", &[]),
    );
}

#[test]
fn criterion_02_token_hole_duality_is_a_face_preserving_involution() {
    assess(
        2,
        "token-hole duality is a dimension- and face-preserving involution",
        &picked("duality", &[]),
    );
}

#[test]
fn criterion_03_vector_fields_validate_with_packed_base_cell() {
    assess(
        3,
        "discrete vector fields validate; unique critical 0-cell is the packed base",
        &picked("morse", &["field/"]),
    );
}

#[test]
fn criterion_04_engine_relators_match_closed_forms() {
    assess(
        4,
        "rewriting-engine relators equal their case-by-case closed forms",
        &picked("reduction", &["closed-form/"]),
    );
}

#[test]
fn criterion_05_noncritical_one_cells_reduce_to_normal_generators() {
    assess(
        5,
        "sampled 1-cells reduce to nothing (tree edges) or one generator (vertical edges)",
        &picked("reduction", &["single-letter/"]),
    );
}

#[test]
fn criterion_06_reduction_is_strategy_independent() {
    assess(
        6,
        "boundary-cycle reduction gives identical words under all strategies",
        &picked("reduction", &["strategies/"]),
    );
}

#[test]
fn criterion_07_two_hole_strips_simplify_to_staircase_groups() {
    assess(
        7,
        "two-hole strips simplify to right-angled groups on staircase-plus-3 graphs",
        &picked("two-hole-strips", &[]),
    );
}

#[test]
fn criterion_08_strip_groups_are_distant_pair_right_angled() {
    assess(
        8,
        "strip presentations and certified pipeline maps hit distant-pair groups",
        &picked("right-angled", &["strip/", "pipeline/", "betti/"]),
    );
}

#[test]
fn criterion_09_small_strip_instances_match_frozen_descriptions() {
    assess(
        9,
        "five-, six-, and seven-token strips match their frozen group descriptions",
        &picked("small-examples", &[]),
    );
}

#[test]
fn criterion_10_two_row_tuple_machinery_is_sound() {
    assess(
        10,
        "five-tuple families realize their data, normalize, and obey support bounds",
        &picked("right-angled", &["families/", "normalized/", "bounds/"]),
    );
}

#[test]
fn criterion_11_sectioning_invariant_tables_hold() {
    assess(
        11,
        "sectional category and higher topological complexity match the closed tables",
        &picked("motion-planning", &[]),
    );
}

#[test]
fn criterion_12_chain_complexes_and_frozen_homology_agree() {
    assess(
        12,
        "boundary operators square to zero; frozen Betti numbers reproduced",
        &picked("morse", &["chain/", "betti/"]),
    );
}
