use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::bounds::BoundTable;
use super::witness::WitnessSearch;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Relation the computed integer must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", content = "value", rename_all = "lowercase")]
pub enum Expectation {
    Eq(i64),
    Lt(i64),
    Le(i64),
    Gt(i64),
    Ge(i64),
}

impl Expectation {
    pub fn holds(&self, computed: i64) -> bool {
        match *self {
            Expectation::Eq(v) => computed == v,
            Expectation::Lt(v) => computed < v,
            Expectation::Le(v) => computed <= v,
            Expectation::Gt(v) => computed > v,
            Expectation::Ge(v) => computed >= v,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Eq(v) => write!(f, "= {v}"),
            Expectation::Lt(v) => write!(f, "< {v}"),
            Expectation::Le(v) => write!(f, "<= {v}"),
            Expectation::Gt(v) => write!(f, "> {v}"),
            Expectation::Ge(v) => write!(f, ">= {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    /// Location of the claim in the proof being replayed.
    pub paper_ref: String,
    pub expected: Expectation,
    pub computed: i64,
    pub status: Status,
    pub elapsed_ms: u64,
    /// True for inequalities the upper-bound argument relies on directly,
    /// false for reproduced constants.
    pub consumed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A computed quantity recorded without a pass/fail judgement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedValue {
    pub id: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub id: String,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub results: Vec<CheckResult>,
    pub derived: Vec<DerivedValue>,
    pub assumptions: Vec<Assumption>,
    pub notes: Vec<String>,
    pub witness: WitnessSearch,
    pub bounds: BoundTable,
    /// Pass iff every check passes.
    pub verdict: Status,
    /// Pass iff every check marked `consumed` passes and a witness was found.
    pub argument_verdict: Status,
    pub failing: Vec<String>,
    pub structure: String,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == check_id)
    }

    /// Same report with every `elapsed_ms` zeroed.
    pub fn without_timings(&self) -> Self {
        let mut copy = self.clone();
        for r in &mut copy.results {
            r.elapsed_ms = 0;
        }
        copy
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .results
            .iter()
            .map(|r| r.check_id.len())
            .max()
            .unwrap_or(0);
        for r in &self.results {
            let _ = writeln!(
                out,
                "[{}] {:<width$}  computed {:>6}  expected {:<8} {:>6} ms  ({}){}",
                r.status,
                r.check_id,
                r.computed,
                r.expected.to_string(),
                r.elapsed_ms,
                r.paper_ref,
                r.detail
                    .as_deref()
                    .map(|d| format!("  {d}"))
                    .unwrap_or_default(),
            );
        }
        if !self.derived.is_empty() {
            out.push_str("\nderived values:\n");
            for d in &self.derived {
                let _ = writeln!(out, "  {} = {}", d.id, d.value);
            }
        }
        out.push_str("\nexternal assumptions (not verified here):\n");
        for a in &self.assumptions {
            let _ = writeln!(out, "  {}: {}", a.id, a.statement);
        }
        if !self.notes.is_empty() {
            out.push_str("\nnotes:\n");
            for n in &self.notes {
                let _ = writeln!(out, "  - {n}");
            }
        }
        out.push_str("\nwitness: ");
        out.push_str(&self.witness.summary());
        out.push_str("\n\nbounds on the covering radius of RM(2,n):\n");
        out.push_str(&self.bounds.to_text());
        let _ = writeln!(out, "\n{}", self.structure);
        let _ = writeln!(
            out,
            "checks: {} total, {} failing",
            self.results.len(),
            self.failing.len()
        );
        if !self.failing.is_empty() {
            let _ = writeln!(out, "failing: {}", self.failing.join(", "));
        }
        let _ = writeln!(out, "argument verdict: {}", self.argument_verdict);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}
