//! Acceptance suite: runs every committed criterion and prints one
//! pass/fail line per criterion. All comparisons are exact (tolerance 0);
//! run with `cargo test --test acceptance -- --nocapture` to see the lines.

use alglev::verify::{self, CheckOutcome};

fn report(outcome: CheckOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!("{status} {}: {}", outcome.name, outcome.detail);
    assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
}

#[test]
fn criterion_01_table1_partition_levels() {
    report(verify::check_table1_levels());
}

#[test]
fn criterion_02_preceding_covers_oracle() {
    report(verify::check_preceding_oracle());
}

#[test]
fn criterion_03_level_longest_chain_oracle() {
    report(verify::check_level_oracle());
}

#[test]
fn criterion_04_specter_roundtrip() {
    report(verify::check_specter_roundtrip());
}

#[test]
fn criterion_05_witness_library() {
    report(verify::check_witness_library());
}

#[test]
fn criterion_06_tn_degeneration_criterion() {
    report(verify::check_tn_criterion());
}

#[test]
fn criterion_07_g2_oracle_sweep() {
    report(verify::check_g2_oracle());
}

#[test]
fn criterion_08_gen_type_spot_values() {
    report(verify::check_gen_type_spots());
}

#[test]
fn criterion_09_table_emission_golden() {
    report(verify::check_table_emission());
}

#[test]
fn criterion_10_classification_lists_golden() {
    report(verify::check_classification_lists());
}

#[test]
fn criterion_11_rset_certification() {
    report(verify::check_rset_certification());
}

#[test]
fn criterion_12_bilinear_chains() {
    report(verify::check_bilinear_chains());
}

#[test]
fn supplement_level2_separation() {
    report(verify::check_level_separation());
}
