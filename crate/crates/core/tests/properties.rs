//! Property suites over random matrices, small groups, random cones and all
//! small hexagonal models.

#[path = "support/suites.rs"]
mod suites;

use std::path::PathBuf;

const CASES: u32 = 500;

#[test]
fn smith_form() {
    suites::snf_suite(CASES).unwrap();
}

#[test]
fn subgroup_test() {
    suites::subgroup_suite(CASES).unwrap();
}

#[test]
fn finite_class_group_iff_simplicial() {
    suites::finiteness_suite(CASES).unwrap();
}

#[test]
fn class_group_is_quotient_group() {
    suites::simplicial_suite(CASES).unwrap();
}

#[test]
fn zigzags_on_fixtures() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    assert_eq!(suites::zigzag_fixture_suite(&dir).unwrap(), 4);
}

#[test]
fn generated_hexagonal_models() {
    assert!(suites::hexagonal_suite(8).unwrap() >= 500);
}
