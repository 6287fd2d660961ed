//! The verification report is reproducible for a fixed config and seed:
//! identical content modulo wall-clock timings, which are measurement data.

use polyharmonic_cli::verify::{run_full_verification, VerifyConfig};

#[test]
fn verification_content_is_reproducible() {
    // Keep the run small: one exact kind, no link ladder.
    let config = VerifyConfig {
        kinds: vec![polyharmonic_core::polytope::PolytopeKind::Cell5],
        mesh_ladder: vec![1],
        ..VerifyConfig::default()
    };
    let mut a = run_full_verification(&config);
    let mut b = run_full_verification(&config);
    for row in a.checks.iter_mut().chain(b.checks.iter_mut()) {
        row.wall_ms = 0;
    }
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_csv(), b.to_csv());
    assert!(a.all_passed);
}

#[test]
fn csv_and_markdown_have_one_row_per_check() {
    let config = VerifyConfig {
        kinds: vec![polyharmonic_core::polytope::PolytopeKind::Cell5],
        mesh_ladder: vec![1],
        ..VerifyConfig::default()
    };
    let report = run_full_verification(&config);
    let csv_rows = report.to_csv().lines().count() - 1;
    assert_eq!(csv_rows, report.checks.len());
    let md_rows = report.to_markdown().lines().count() - 2;
    assert_eq!(md_rows, report.checks.len());
    // Check names are unique: each criterion appears exactly once.
    let mut names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    names.sort_unstable();
    let before = names.len();
    names.dedup();
    assert_eq!(names.len(), before, "duplicate check names");
}
