use frobgp_core::suite::{run_criterion, CRITERIA};

fn criterion(id: usize) {
    let o = run_criterion(id, 20, 0);
    let verdict = if o.passed { "PASS" } else { "FAIL" };
    println!("criterion {} {}: {verdict} ({} checks)", o.id, o.name, o.checks);
    for f in &o.failures {
        println!("    {f}");
    }
    assert!(o.passed, "criterion {id} failed: {:?}", o.failures);
}

#[test]
fn criteria_are_numbered_one_to_nine() {
    let ids: Vec<usize> = CRITERIA.iter().map(|c| c.0).collect();
    assert_eq!(ids, (1..=9).collect::<Vec<_>>());
}

#[test]
fn criterion_1_gorenstein_profiles() {
    criterion(1);
}

#[test]
fn criterion_2_gpd_transfer_tables() {
    criterion(2);
}

#[test]
fn criterion_3_quasi_bicomplex_totalization() {
    criterion(3);
}

#[test]
fn criterion_4_adjunction_diagnostics() {
    criterion(4);
}

#[test]
fn criterion_5_frobenius_certification() {
    criterion(5);
}

#[test]
fn criterion_6_faithfulness_necessity() {
    criterion(6);
}

#[test]
fn criterion_7_tri_equivalence_conditions() {
    criterion(7);
}

#[test]
fn criterion_8_complexes_and_graded_modules() {
    criterion(8);
}

#[test]
fn criterion_9_oracle_cross_checks() {
    criterion(9);
}
