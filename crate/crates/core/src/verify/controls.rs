//! Negative controls: perturb one fixture or one stated constant and
//! confirm that the check reading it reacts.
//!
//! A check that passes on the pristine inputs must fail (and be named in
//! `failing`) once its constant is perturbed. A check that already fails
//! on the stated value is instead fed the computed value and must pass,
//! which shows it actually reads the constant.

use serde::{Deserialize, Serialize};

use super::{Expectations, Stage, Status, Verifier, VerifyConfig};
use crate::anf::AnfTermSet;
use crate::error::Result;

/// One perturbed constant, the stage that reads it and the check it feeds.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub label: String,
    pub expectations: Expectations,
    pub stage: Stage,
    pub check_id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlOutcome {
    pub label: String,
    pub check_id: String,
    /// Status on pristine inputs; `None` when the perturbation creates a new check id.
    pub baseline: Option<Status>,
    pub mutated: Option<Status>,
    pub reacted: bool,
}

/// Accessor for one `(threshold, count)` profile constant.
type ProfileField = fn(&mut Expectations) -> &mut (usize, i64);

fn fun_id(fun: usize) -> String {
    format!("fun{fun:02}")
}

/// Every single-constant perturbation of `base`.
pub fn expectation_mutations(base: &Expectations) -> Vec<Mutation> {
    let mut out = Vec::new();
    let mut push =
        |label: String, stage: Stage, check_id: String, edit: &dyn Fn(&mut Expectations)| {
            let mut expectations = base.clone();
            edit(&mut expectations);
            out.push(Mutation {
                label,
                expectations,
                stage,
                check_id,
            });
        };

    push(
        "g0_nl2".into(),
        Stage::Preamble,
        "preamble.g0.nl2".into(),
        &|e| e.g0_nl2 += 1,
    );
    push(
        "g0_max_coset_nl".into(),
        Stage::Preamble,
        "preamble.g0.max_coset_nl".into(),
        &|e| e.g0_max_coset_nl -= 1,
    );
    for i in 0..12 {
        push(
            format!("representative_nl2[{i}]"),
            Stage::Nl2,
            format!("nl2.{}", fun_id(i + 1)),
            &|e| e.representative_nl2[i] += 1,
        );
    }
    for (c, claim) in base.nfh.iter().enumerate() {
        for (p, &(r, _)) in claim.points.iter().enumerate() {
            push(
                format!("nfh[{c}].points[{p}]"),
                Stage::Nfh,
                format!("nfh.{}.r{r}", fun_id(claim.fun)),
                &|e| e.nfh[c].points[p].1 += 1,
            );
        }
        if claim.tail_zero_from.is_some() {
            // moves the tail start onto the populated middle of the histogram
            push(
                format!("nfh[{c}].tail_zero_from"),
                Stage::Nfh,
                format!("nfh.{}.tail_from_20", fun_id(claim.fun)),
                &|e| e.nfh[c].tail_zero_from = Some(20),
            );
        }
    }
    for (k, claim) in base.s16.iter().enumerate() {
        push(
            format!("s16[{k}]"),
            Stage::S16,
            format!("s16.{}.r{}", fun_id(claim.fun), claim.r),
            &|e| e.s16[k].count += 1,
        );
    }
    for (k, claim) in base.shifted.iter().enumerate() {
        let check_id = format!("s16_shift.{}.r{}", fun_id(claim.fun), claim.r);
        if claim.count.is_some() {
            push(
                format!("shifted[{k}].count"),
                Stage::S16,
                check_id.clone(),
                &|e| e.shifted[k].count = e.shifted[k].count.map(|c| c - 1),
            );
        }
        if let Some(below) = claim.below {
            // tighten to the bound's own floor, or loosen a failing one
            push(format!("shifted[{k}].below"), Stage::S16, check_id, &|e| {
                e.shifted[k].below = Some(if claim.fun == 11 { 22 } else { below.max(50) })
            });
        }
    }
    let profiles: [(&str, String, ProfileField); 4] = [
        ("fun2_profile", "profile.fun02_s16".into(), |e| {
            &mut e.fun2_profile
        }),
        ("fun4_profile", "profile.fun04_s16".into(), |e| {
            &mut e.fun4_profile
        }),
        ("fun2_shift_profile", "profile.fun02_shift26".into(), |e| {
            &mut e.fun2_shift_profile
        }),
        ("fun7_shift_profile", "profile.fun07_shift25".into(), |e| {
            &mut e.fun7_shift_profile
        }),
    ];
    for (label, prefix, field) in profiles {
        let mut probe = base.clone();
        let t = field(&mut probe).0;
        push(
            label.into(),
            Stage::Profiles,
            format!("{prefix}.t{t}"),
            &|e| field(e).1 += 1,
        );
    }
    push(
        "witness_nl2".into(),
        Stage::Witness,
        "witness.nl2_recomputed".into(),
        &|e| e.witness_nl2 += 1,
    );
    for (k, n) in [8, 9, 10].into_iter().enumerate() {
        push(
            format!("propagated_upper[{k}]"),
            Stage::Bounds,
            format!("bounds.n{n:02}.upper"),
            &|e| e.propagated_upper[k] += 1,
        );
        push(
            format!("table_lower[{k}]"),
            Stage::Bounds,
            format!("bounds.n{n:02}.lower"),
            &|e| e.table_lower[k] -= 1,
        );
    }
    out
}

/// Perturbs every stated constant in turn. A check failing on the stated
/// value is re-run with the value it computed and must then pass.
pub fn run_expectation_controls(config: &VerifyConfig) -> Result<Vec<ControlOutcome>> {
    let stages: Vec<Stage> = Stage::ALL
        .into_iter()
        .filter(|&s| s != Stage::Concat)
        .collect();
    let baseline = Verifier::new(config.clone())?.report(&stages)?;
    let mut out = Vec::new();
    for m in expectation_mutations(&config.expectations) {
        let before = baseline.get(&m.check_id);
        let expectations = match before {
            // swap the perturbation for the value the check computed
            Some(r) if !r.status.is_pass() => {
                with_computed(&config.expectations, &m.label, r.computed).unwrap_or(m.expectations)
            }
            _ => m.expectations,
        };
        let report = Verifier::new(VerifyConfig {
            expectations,
            ..config.clone()
        })?
        .report(&[m.stage])?;
        let after = report.get(&m.check_id).map(|r| r.status);
        let reacted = match before.map(|r| r.status) {
            Some(Status::Pass) => {
                after == Some(Status::Fail)
                    && report.failing.contains(&m.check_id)
                    && report.verdict == Status::Fail
            }
            Some(Status::Fail) => after == Some(Status::Pass),
            None => after == Some(Status::Fail) && report.failing.contains(&m.check_id),
        };
        out.push(ControlOutcome {
            label: m.label,
            check_id: m.check_id,
            baseline: before.map(|r| r.status),
            mutated: after,
            reacted,
        });
    }
    Ok(out)
}

/// Replaces the field named by `label` with `computed` where that field is
/// a plain equality or a strict bound.
fn with_computed(base: &Expectations, label: &str, computed: i64) -> Option<Expectations> {
    let mut e = base.clone();
    match label {
        "fun2_profile" => e.fun2_profile.1 = computed,
        "fun4_profile" => e.fun4_profile.1 = computed,
        "fun2_shift_profile" => e.fun2_shift_profile.1 = computed,
        "fun7_shift_profile" => e.fun7_shift_profile.1 = computed,
        "g0_nl2" => e.g0_nl2 = computed,
        "g0_max_coset_nl" => e.g0_max_coset_nl = computed,
        "witness_nl2" => e.witness_nl2 = computed,
        _ => {
            let index = |prefix: &str| -> Option<usize> {
                label.strip_prefix(prefix)?.split(']').next()?.parse().ok()
            };
            if let Some(k) = index("shifted[") {
                let claim = &mut e.shifted[k];
                if claim.count.is_some() {
                    claim.count = Some(computed);
                } else {
                    claim.below = Some(computed + 1);
                }
            } else if let Some(k) = index("s16[") {
                e.s16[k].count = computed;
            } else {
                let k = index("representative_nl2[")?;
                e.representative_nl2[k] = computed;
            }
        }
    }
    Some(e)
}

/// XORs one quartic monomial into each fixture in turn; some check naming
/// that fixture must newly fail and the argument verdict must drop.
pub fn run_fixture_controls(config: &VerifyConfig) -> Result<Vec<ControlOutcome>> {
    let stages = [Stage::Preamble, Stage::Nl2, Stage::Nfh];
    let baseline = Verifier::new(config.clone())?.report(&stages)?;
    let extra = AnfTermSet::parse(6, "1256")?;
    let mut out = Vec::new();
    for rep in &config.fixtures.entries {
        let mut mutated = config.clone();
        let anf = AnfTermSet::parse(6, &rep.anf)?.xor(&extra)?;
        mutated.fixtures.set(&rep.id, &anf.to_string());
        let report = Verifier::new(mutated)?.report(&stages)?;
        let marker = match rep
            .id
            .strip_prefix("fun")
            .and_then(|i| i.parse::<usize>().ok())
        {
            Some(i) => format!(".{}.", fun_id(i)),
            None => "preamble.g0.".into(),
        };
        let fresh = report
            .failing
            .iter()
            .find(|id| !baseline.failing.contains(id) && format!(".{id}.").contains(&marker))
            .cloned();
        out.push(ControlOutcome {
            label: format!("fixture {} + x1x2x5x6", rep.id),
            check_id: fresh.clone().unwrap_or_default(),
            baseline: Some(Status::Pass),
            mutated: Some(report.verdict),
            reacted: fresh.is_some()
                && report.verdict == Status::Fail
                && report.argument_verdict == Status::Fail,
        });
    }
    Ok(out)
}
