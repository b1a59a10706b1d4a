//! A verifier that cannot fail is not evidence: every fixture and every
//! stated constant is perturbed and the check it feeds must react.

use rmcover::verify::controls::{
    expectation_mutations, run_expectation_controls, run_fixture_controls,
};
use rmcover::verify::{run_full_verification, Expectations, Status, VerifyConfig};

fn config() -> VerifyConfig {
    VerifyConfig {
        record_timings: false,
        ..VerifyConfig::default()
    }
}

#[test]
fn every_mutation_changes_something() {
    let base = Expectations::default();
    let list = expectation_mutations(&base);
    assert!(list.len() > 70, "{} mutations", list.len());
    for m in &list {
        assert_ne!(m.expectations, base, "{}", m.label);
    }
}

#[test]
fn every_expected_constant_is_load_bearing() {
    let outcomes = run_expectation_controls(&config()).unwrap();
    let silent: Vec<_> = outcomes.iter().filter(|o| !o.reacted).collect();
    assert!(silent.is_empty(), "{silent:#?}");
    // the known discrepancies are exercised through the pass-on-computed path
    for id in ["profile.fun02_s16.t13", "s16_shift.fun12.r25"] {
        let o = outcomes.iter().find(|o| o.check_id == id).unwrap();
        assert_eq!(o.baseline, Some(Status::Fail));
        assert_eq!(o.mutated, Some(Status::Pass));
    }
}

#[test]
fn every_fixture_is_load_bearing() {
    let outcomes = run_fixture_controls(&config()).unwrap();
    assert_eq!(outcomes.len(), 13);
    for o in outcomes {
        assert!(o.reacted, "{o:?}");
    }
}

#[test]
fn corrupted_fun2_fails_the_full_pipeline_at_its_nfh_checks() {
    let mut config = VerifyConfig {
        trials: 1,
        ..config()
    };
    assert!(config.fixtures.set("fun2", "1234+126+145+235+136"));
    let report = run_full_verification(config).unwrap();
    assert_eq!(report.verdict, Status::Fail);
    assert_eq!(report.argument_verdict, Status::Fail);
    assert!(
        report.failing.iter().any(|id| id.starts_with("nfh.fun02.")),
        "{:?}",
        report.failing
    );
}
