use std::sync::OnceLock;

use rmcover::verify::{
    run_full_verification, Status, VerificationReport, VerifyConfig, TARGET_NL2,
};
use rmcover::TruthTable;

fn run_with_threads(threads: usize) -> VerificationReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    pool.install(|| {
        run_full_verification(VerifyConfig {
            record_timings: false,
            ..VerifyConfig::default()
        })
        .unwrap()
    })
}

fn single_threaded() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run_with_threads(1))
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let many = run_with_threads(4);
    assert_eq!(single_threaded().to_json(), many.to_json());
}

#[test]
fn json_round_trip() {
    let report = single_threaded();
    let back = VerificationReport::from_json(&report.to_json()).unwrap();
    assert_eq!(&back, report);
}

#[test]
fn full_report_validates_against_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut doc = serde_json::json!({ "verb": "verify" });
    doc["report"] = serde_json::to_value(single_threaded()).unwrap();
    let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn assumptions_and_structure_are_stated() {
    let report = single_threaded();
    let ids: Vec<&str> = report.assumptions.iter().map(|a| a.id.as_str()).collect();
    assert_eq!(ids, ["A1", "A2"]);
    assert!(report.structure.contains("not recomputed by brute force"));
    // nothing in the results claims to have checked the imported lemma
    assert!(report
        .results
        .iter()
        .all(|r| !r.check_id.contains("lemma1")));
}

#[test]
fn results_are_sorted_and_unique() {
    let ids: Vec<&str> = single_threaded()
        .results
        .iter()
        .map(|r| r.check_id.as_str())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn witness_certificate_rechecks() {
    let report = single_threaded();
    let cert = report.witness.certificate.as_ref().expect("witness found");
    let f = TruthTable::from_hex(7, &cert.hex).unwrap();
    assert_eq!(rmcover::nl2(&f), TARGET_NL2);
    assert_eq!(cert.recomputed_nl2, TARGET_NL2);
    assert_eq!(
        rmcover::AnfTermSet::parse(7, &cert.anf)
            .unwrap()
            .to_truth_table(),
        f
    );
}

/// Constants stated for the proof that do not reproduce; everything the
/// case analysis consumes does.
#[test]
fn only_the_known_discrepancies_fail() {
    let report = single_threaded();
    assert_eq!(
        report.failing,
        [
            "nfh.fun03.zero_form_in_fh_nl2",
            "nfh.fun08.zero_form_in_fh_nl2",
            "profile.fun02_s16.t13",
            "s16_shift.fun12.r25",
        ]
    );
    assert_eq!(report.verdict, Status::Fail);
    assert_eq!(report.argument_verdict, Status::Pass);
    assert!(report
        .failing
        .iter()
        .all(|id| !report.get(id).unwrap().consumed));
    assert_eq!(report.get("profile.fun02_s16.t13").unwrap().computed, 46);
    assert_eq!(report.get("s16_shift.fun12.r25").unwrap().computed, 49);
}
