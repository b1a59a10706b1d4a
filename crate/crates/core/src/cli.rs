//! Command-line front end shared by the `rmcover` binary and its tests.
//!
//! Every verb prints either a short text rendering or one JSON document
//! matching `schema/output.schema.json`. Exit codes: 0 on success or a
//! passing verdict, 1 when a verification check fails, 2 on usage errors.

use std::fmt::Write as _;

use clap::{ArgGroup, Parser, ValueEnum};
use serde::Serialize;

use crate::anf::AnfTermSet;
use crate::error::{Error, Result};
use crate::quadratic::{explain_layout, QuadraticForm};
use crate::secondorder::{in_s16, nl2, CosetProfile, FhSet};
use crate::truth_table::TruthTable;
use crate::verify::{
    self, fixtures, propagate_bounds, search_witness, BoundTable, Stage, Status,
    VerificationReport, Verifier, VerifyConfig, WitnessSearch, DEFAULT_SEED, DEFAULT_TRIALS,
    DEFAULT_WITNESS_BUDGET, TARGET_NL2,
};
use crate::walsh::{fwht, nonlinearity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Nl,
    Nl2,
    Anf,
    Spectrum,
    Nfh,
    Fh,
    S16,
    Verify,
    Witness,
    Bounds,
    ExplainLayout,
}

/// Subsets of the verification pipeline selectable with `verify --only`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StageArg {
    Preamble,
    Nl2,
    Nfh,
    S16,
    Profiles,
    Witness,
    Concat,
    Bounds,
}

impl From<StageArg> for Stage {
    fn from(arg: StageArg) -> Self {
        match arg {
            StageArg::Preamble => Stage::Preamble,
            StageArg::Nl2 => Stage::Nl2,
            StageArg::Nfh => Stage::Nfh,
            StageArg::S16 => Stage::S16,
            StageArg::Profiles => Stage::Profiles,
            StageArg::Witness => Stage::Witness,
            StageArg::Concat => Stage::Concat,
            StageArg::Bounds => Stage::Bounds,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Anf,
    Hex,
    Named,
}

#[derive(Debug, Parser)]
#[command(
    name = "rmcover",
    version,
    about = "Second-order nonlinearity analytics and the RM(2,7) covering-radius checks"
)]
#[command(group(ArgGroup::new("input").args(["anf", "hex", "fun"])))]
pub struct Command {
    #[arg(value_enum)]
    pub verb: Verb,

    /// Function as an ANF sum, e.g. "123+145+246+356+456" (`c` is the constant).
    #[arg(long)]
    pub anf: Option<String>,

    /// Function as a truth table, most-significant hex digit first.
    #[arg(long)]
    pub hex: Option<String>,

    /// Built-in representative: fun1..fun12 or g0.
    #[arg(long = "fun")]
    pub fun: Option<String>,

    /// Number of variables; required for ANF input unless x7 occurs.
    #[arg(short = 'n')]
    pub n: Option<usize>,

    /// Radius r for `fh` and `s16`; defaults to nl2 of the input.
    #[arg(short = 'r', long = "radius")]
    pub radius: Option<u32>,

    /// Restrict `verify` to the given stages (repeatable).
    #[arg(long, value_enum)]
    pub only: Vec<StageArg>,

    #[arg(long)]
    pub json: bool,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Random pairs for the concatenation-bound checks.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,

    /// Candidate budget for the witness search.
    #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
    pub budget: u64,

    /// Worker threads for the scans; never changes numeric output.
    #[arg(long)]
    pub threads: Option<usize>,

    /// Record every `elapsed_ms` as 0 so reports compare byte for byte.
    #[arg(long)]
    pub no_timings: bool,

    /// Also print the quadratic-form coefficient layout.
    #[arg(long)]
    pub explain_layout: bool,
}

/// Builds a table from one input spec. `n` may be omitted for hex input
/// (inferred from the digit count) and for ANF input mentioning x7.
pub fn parse_function(spec: &str, format: InputFormat, n: Option<usize>) -> Result<TruthTable> {
    match format {
        InputFormat::Anf => {
            let n = match n.or_else(|| AnfTermSet::infer_vars(spec)) {
                Some(n) => n,
                None => {
                    return Err(Error::Parse {
                        token: spec.to_string(),
                        position: 0,
                        reason: "variable count is ambiguous; pass -n".into(),
                    })
                }
            };
            Ok(AnfTermSet::parse(n, spec)?.to_truth_table())
        }
        InputFormat::Hex => match n {
            Some(n) => TruthTable::from_hex(n, spec),
            None => TruthTable::from_hex_auto(spec),
        },
        InputFormat::Named => {
            let f = fixtures::named(spec).ok_or_else(|| Error::Parse {
                token: spec.to_string(),
                position: 0,
                reason: "unknown fixture; expected fun1..fun12 or g0".into(),
            })?;
            match n {
                Some(n) if n != f.n() => Err(Error::MismatchedVars {
                    left: n,
                    right: f.n(),
                }),
                _ => Ok(f),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionInfo {
    pub n: usize,
    pub anf: String,
    pub hex: String,
    pub degree: usize,
}

impl FunctionInfo {
    fn of(f: &TruthTable) -> Self {
        let anf = AnfTermSet::from_truth_table(f);
        Self {
            n: f.n(),
            anf: anf.to_string(),
            hex: f.to_hex(),
            degree: anf.degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormEntry {
    pub mask: String,
    pub pairs: String,
    pub s16: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Output {
    Nl {
        function: FunctionInfo,
        nl: u32,
        max_abs_walsh: i32,
    },
    Nl2 {
        function: FunctionInfo,
        nl2: u32,
    },
    Anf {
        function: FunctionInfo,
        terms: Vec<Vec<usize>>,
    },
    Spectrum {
        function: FunctionInfo,
        walsh: Vec<i32>,
        nl: u32,
    },
    Nfh {
        function: FunctionInfo,
        /// `[r, count]` for every non-zero bucket.
        histogram: Vec<(u32, u64)>,
        total: u64,
    },
    Fh {
        function: FunctionInfo,
        r: u32,
        size: usize,
        members: Vec<FormEntry>,
    },
    S16 {
        function: FunctionInfo,
        r: u32,
        fh_size: usize,
        count: usize,
        members: Vec<FormEntry>,
    },
    Verify {
        report: VerificationReport,
    },
    Witness {
        search: WitnessSearch,
        target: u32,
    },
    Bounds {
        cr27: u64,
        table: BoundTable,
    },
    ExplainLayout {
        n: usize,
        layout: String,
    },
}

/// Result of one invocation: the rendered stream and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Command::try_parse_from(args) {
        Ok(command) => run(&command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn run(command: &Command) -> Outcome {
    match command.threads {
        Some(0) => Outcome::usage("--threads must be at least 1\n".into()),
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| dispatch(command)),
            Err(e) => Outcome::usage(format!("cannot start thread pool: {e}\n")),
        },
        None => dispatch(command),
    }
}

fn dispatch(command: &Command) -> Outcome {
    let output = match execute(command) {
        Ok(output) => output,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let code = match &output {
        Output::Verify { report } if report.verdict != Status::Pass => EXIT_CHECK_FAILED,
        Output::Witness { search, .. } if !search.found() => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };
    let mut stdout = if command.json {
        let mut value = serde_json::to_value(&output).expect("output serialises");
        if command.explain_layout {
            let n = layout_vars(command, &output);
            value["layout"] = explain_layout(n).unwrap_or_default().into();
        }
        serde_json::to_string_pretty(&value).expect("json value serialises")
    } else {
        let mut text = String::new();
        if command.explain_layout && command.verb != Verb::ExplainLayout {
            text.push_str(&explain_layout(layout_vars(command, &output)).unwrap_or_default());
            text.push('\n');
        }
        text.push_str(&render_text(&output));
        text
    };
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn layout_vars(command: &Command, output: &Output) -> usize {
    match output {
        Output::Nl { function, .. }
        | Output::Nl2 { function, .. }
        | Output::Anf { function, .. }
        | Output::Spectrum { function, .. }
        | Output::Nfh { function, .. }
        | Output::Fh { function, .. }
        | Output::S16 { function, .. } => function.n,
        Output::ExplainLayout { n, .. } => *n,
        _ => command.n.unwrap_or(6),
    }
}

fn input(command: &Command) -> Result<TruthTable> {
    let (spec, format) = match (&command.anf, &command.hex, &command.fun) {
        (Some(s), _, _) => (s, InputFormat::Anf),
        (_, Some(s), _) => (s, InputFormat::Hex),
        (_, _, Some(s)) => (s, InputFormat::Named),
        _ => {
            return Err(Error::Parse {
                token: format!("{:?}", command.verb).to_lowercase(),
                position: 0,
                reason: "this verb needs --anf, --hex or --fun".into(),
            })
        }
    };
    parse_function(spec, format, command.n)
}

fn form_entry(q: &QuadraticForm) -> FormEntry {
    FormEntry {
        mask: q.to_hex(),
        pairs: q.to_string(),
        s16: q.n() == 6 && in_s16(q),
    }
}

fn fh_for(command: &Command, f: &TruthTable) -> Result<FhSet> {
    if f.n() != 6 {
        return Err(Error::RequiresSixVars("the Fh set"));
    }
    let profile = CosetProfile::compute(f);
    let r = command.radius.unwrap_or_else(|| profile.min());
    FhSet::from_profile(&profile, r)
}

pub fn execute(command: &Command) -> Result<Output> {
    Ok(match command.verb {
        Verb::Nl => {
            let f = input(command)?;
            Output::Nl {
                function: FunctionInfo::of(&f),
                nl: nonlinearity(&f),
                max_abs_walsh: fwht(&f).max_abs(),
            }
        }
        Verb::Nl2 => {
            let f = input(command)?;
            Output::Nl2 {
                function: FunctionInfo::of(&f),
                nl2: nl2(&f),
            }
        }
        Verb::Anf => {
            let f = input(command)?;
            Output::Anf {
                function: FunctionInfo::of(&f),
                terms: AnfTermSet::from_truth_table(&f).terms(),
            }
        }
        Verb::Spectrum => {
            let f = input(command)?;
            Output::Spectrum {
                function: FunctionInfo::of(&f),
                walsh: fwht(&f).values().to_vec(),
                nl: nonlinearity(&f),
            }
        }
        Verb::Nfh => {
            let f = input(command)?;
            let spectrum = CosetProfile::compute(&f).spectrum();
            Output::Nfh {
                function: FunctionInfo::of(&f),
                histogram: spectrum.nonzero().collect(),
                total: spectrum.total(),
            }
        }
        Verb::Fh => {
            let f = input(command)?;
            let set = fh_for(command, &f)?;
            Output::Fh {
                function: FunctionInfo::of(&f),
                r: set.r(),
                size: set.len(),
                members: set.members().iter().map(form_entry).collect(),
            }
        }
        Verb::S16 => {
            let f = input(command)?;
            let set = fh_for(command, &f)?;
            let members: Vec<FormEntry> = set
                .members()
                .iter()
                .filter(|q| in_s16(q))
                .map(form_entry)
                .collect();
            Output::S16 {
                function: FunctionInfo::of(&f),
                r: set.r(),
                fh_size: set.len(),
                count: members.len(),
                members,
            }
        }
        Verb::Verify => Output::Verify {
            report: verify_report(command)?,
        },
        Verb::Witness => Output::Witness {
            search: search_witness(command.budget, command.seed)?,
            target: TARGET_NL2,
        },
        Verb::Bounds => Output::Bounds {
            cr27: TARGET_NL2 as u64,
            table: propagate_bounds(TARGET_NL2 as u64),
        },
        Verb::ExplainLayout => {
            let n = command.n.unwrap_or(6);
            Output::ExplainLayout {
                n,
                layout: explain_layout(n)?,
            }
        }
    })
}

fn verify_report(command: &Command) -> Result<VerificationReport> {
    let config = VerifyConfig {
        seed: command.seed,
        trials: command.trials,
        witness_budget: command.budget,
        record_timings: !command.no_timings,
        ..VerifyConfig::default()
    };
    if command.only.is_empty() {
        return verify::run_full_verification(config);
    }
    let stages: Vec<Stage> = command.only.iter().map(|&s| s.into()).collect();
    Verifier::new(config)?.report(&stages)
}

fn render_forms(out: &mut String, members: &[FormEntry]) {
    for m in members {
        let mark = if m.s16 { "  S16" } else { "" };
        let _ = writeln!(out, "  {:>8}  {}{mark}", m.mask, m.pairs);
    }
}

pub fn render_text(output: &Output) -> String {
    let mut out = String::new();
    match output {
        Output::Nl { nl, .. } => {
            let _ = writeln!(out, "{nl}");
        }
        Output::Nl2 { nl2, .. } => {
            let _ = writeln!(out, "{nl2}");
        }
        Output::Anf { function, .. } => {
            let _ = writeln!(out, "{}", function.anf);
        }
        Output::Spectrum { walsh, nl, .. } => {
            let values: Vec<String> = walsh.iter().map(i32::to_string).collect();
            let _ = writeln!(out, "{}", values.join(" "));
            let _ = writeln!(out, "nl = {nl}");
        }
        Output::Nfh {
            histogram, total, ..
        } => {
            for (r, count) in histogram {
                let _ = writeln!(out, "{r:>3} {count}");
            }
            let _ = writeln!(out, "total {total}");
        }
        Output::Fh {
            r, size, members, ..
        } => {
            let _ = writeln!(out, "|Fh({r})| = {size}");
            render_forms(&mut out, members);
        }
        Output::S16 {
            r,
            fh_size,
            count,
            members,
            ..
        } => {
            let _ = writeln!(out, "|Fh({r}) ∩ S16| = {count} of {fh_size}");
            render_forms(&mut out, members);
        }
        Output::Verify { report } => out.push_str(&report.to_text()),
        Output::Witness { search, .. } => {
            let _ = writeln!(out, "{}", search.summary());
            if let Some(c) = &search.certificate {
                let _ = writeln!(out, "hex {}", c.hex);
            }
        }
        Output::Bounds { table, .. } => out.push_str(&table.to_text()),
        Output::ExplainLayout { layout, .. } => out.push_str(layout),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_function_formats() {
        let fun1 = parse_function("126+135+234", InputFormat::Anf, Some(6)).unwrap();
        assert_eq!(fun1, fixtures::named("fun1").unwrap());
        assert!(parse_function("0", InputFormat::Anf, Some(6))
            .unwrap()
            .is_zero());
        let hex = "0123456789abcdef0123456789abcdef";
        assert_eq!(
            parse_function(hex, InputFormat::Hex, Some(7))
                .unwrap()
                .to_hex(),
            hex
        );
        assert!(matches!(
            parse_function(hex, InputFormat::Hex, Some(6)),
            Err(Error::HexLength { .. })
        ));
        assert!(parse_function("12+3", InputFormat::Anf, None).is_err());
        assert_eq!(parse_function("17", InputFormat::Anf, None).unwrap().n(), 7);
        assert!(parse_function("12", InputFormat::Anf, Some(9)).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(["rmcover", "nl2"]).code, EXIT_USAGE);
        assert_eq!(run_args(["rmcover", "frobnicate"]).code, EXIT_USAGE);
        let both = run_args(["rmcover", "nl", "--anf", "12", "--hex", "00", "-n", "3"]);
        assert_eq!(both.code, EXIT_USAGE);
        let bad = run_args(["rmcover", "nl", "--anf", "12+8", "-n", "6"]);
        assert_eq!(bad.code, EXIT_USAGE);
        assert!(bad.stderr.contains('8'), "{}", bad.stderr);
    }

    #[test]
    fn nl2_of_g0() {
        let out = run_args(["rmcover", "nl2", "--anf", "123+145+246+356+456", "-n", "6"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout.trim(), "18");
    }
}
