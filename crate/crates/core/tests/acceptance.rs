//! One line per acceptance criterion; exits non-zero if any criterion fails.
//! Criteria are evaluated exactly as stated, never relaxed to match the
//! computed values.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmcover::verify::controls::{run_expectation_controls, run_fixture_controls};
use rmcover::verify::fixtures::named;
use rmcover::verify::{
    check_concat_bound_samples, run_full_verification, search_witness, CheckResult, Stage, Status,
    VerificationReport, Verifier, VerifyConfig, DEFAULT_SEED, DEFAULT_WITNESS_BUDGET,
};
use rmcover::{fwht, nfh_spectrum, nl2, AffineMap, TruthTable};

struct Line {
    number: usize,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn stage(stages: &[Stage]) -> (VerificationReport, Duration) {
    let start = Instant::now();
    let report = Verifier::new(VerifyConfig::default())
        .and_then(|v| v.report(stages))
        .expect("pipeline runs");
    (report, start.elapsed())
}

fn describe(results: &[&CheckResult]) -> String {
    let failing: Vec<String> = results
        .iter()
        .filter(|r| !r.status.is_pass())
        .map(|r| {
            format!(
                "{} computed {} expected {}",
                r.check_id, r.computed, r.expected
            )
        })
        .collect();
    if failing.is_empty() {
        format!("{} checks pass", results.len())
    } else {
        format!(
            "{} of {} checks fail: {}",
            failing.len(),
            results.len(),
            failing.join("; ")
        )
    }
}

fn all_pass(results: &[&CheckResult]) -> bool {
    !results.is_empty() && results.iter().all(|r| r.status.is_pass())
}

fn select(report: &VerificationReport, keep: impl Fn(&str) -> bool) -> Vec<&CheckResult> {
    report
        .results
        .iter()
        .filter(|r| keep(&r.check_id))
        .collect()
}

fn criterion_1() -> Line {
    let (report, elapsed) = stage(&[Stage::Preamble]);
    let checks = select(&report, |id| {
        id == "preamble.g0.nl2" || id == "preamble.g0.max_coset_nl"
    });
    Line {
        number: 1,
        title: "preamble: nl2(g0) = 18, max_q nl(g0+q) = 22",
        pass: all_pass(&checks) && checks.len() == 2 && elapsed < Duration::from_secs(1),
        detail: describe(&checks),
        elapsed,
    }
}

fn criterion_2() -> Line {
    let (report, elapsed) = stage(&[Stage::Nl2]);
    let checks = select(&report, |id| id.starts_with("nl2.fun"));
    let values: Vec<String> = checks.iter().map(|r| r.computed.to_string()).collect();
    Line {
        number: 2,
        title: "representatives: nl2 = 16 (fun1..5), 15 (fun6..12)",
        pass: all_pass(&checks) && checks.len() == 12 && elapsed < Duration::from_secs(2),
        detail: format!("{}; values [{}]", describe(&checks), values.join(", ")),
        elapsed,
    }
}

fn criterion_3() -> Line {
    let (report, elapsed) = stage(&[Stage::Nfh]);
    // the stated triples and vanishing tails
    let checks = select(&report, |id| {
        let last = id.rsplit('.').next().unwrap_or("");
        id.starts_with("nfh.") && (last.starts_with('r') || last.starts_with("tail_from"))
    });
    Line {
        number: 3,
        title: "NFh triples and vanishing tails for all 12 representatives",
        pass: all_pass(&checks) && checks.len() == 33 && elapsed < Duration::from_secs(5),
        detail: describe(&checks),
        elapsed,
    }
}

fn criterion_4() -> Line {
    let (report, elapsed) = stage(&[Stage::S16]);
    let checks = select(&report, |id| {
        id.starts_with("s16.") || id.starts_with("s16_shift.")
    });
    let logged: Vec<String> = report
        .derived
        .iter()
        .filter(|d| d.id.starts_with("s16_shift."))
        .map(|d| format!("{} = {}", d.id, d.value))
        .collect();
    Line {
        number: 4,
        title:
            "S16 counts 47, 43, 23, 15, 24, 21, 17; shifted 7, 55, 21, 55, 21, 13; fun11/fun12 < 30",
        pass: all_pass(&checks) && checks.len() == 15 && elapsed < Duration::from_secs(60),
        detail: format!("{}; logged: {}", describe(&checks), logged.join("; ")),
        elapsed,
    }
}

fn criterion_5() -> Line {
    let (report, elapsed) = stage(&[Stage::Profiles]);
    let checks = select(&report, |id| {
        [
            "profile.fun02_s16.t13",
            "profile.fun02_shift26.t13",
            "profile.fun07_shift25.t12",
            "profile.fun04_s16.t12",
        ]
        .contains(&id)
    });
    let consumed = select(&report, |id| id.starts_with("argument."));
    Line {
        number: 5,
        title: "pair profiles 45 (t=13), 22, 22 (t=12), 42 (t=12), universally over each set",
        pass: all_pass(&checks) && checks.len() == 4 && elapsed < Duration::from_secs(120),
        detail: format!(
            "{}; inequalities used by the argument: {}",
            describe(&checks),
            describe(&consumed)
        ),
        elapsed,
    }
}

fn criterion_6() -> Line {
    let start = Instant::now();
    let search = search_witness(DEFAULT_WITNESS_BUDGET, DEFAULT_SEED).expect("search runs");
    let search_time = start.elapsed();
    let (single, ok) = match &search.certificate {
        Some(c) => {
            let f = TruthTable::from_hex(7, &c.hex).expect("certificate hex");
            let t = Instant::now();
            let value = nl2(&f);
            (t.elapsed(), value == 40 && c.recomputed_nl2 == 40)
        }
        None => (Duration::ZERO, false),
    };
    Line {
        number: 6,
        title: "witness in B_7 with independently recomputed nl2 = 40",
        pass: ok
            && search.found()
            && single < Duration::from_secs(10)
            && search_time < Duration::from_secs(600),
        detail: format!(
            "{}; single 2^21-coset scan {:.2} s",
            search.summary(),
            single.as_secs_f64()
        ),
        elapsed: search_time,
    }
}

fn criterion_7() -> Line {
    let (report, elapsed) = stage(&[Stage::Bounds]);
    let checks = select(&report, |id| id.starts_with("bounds.n"));
    Line {
        number: 7,
        title: "propagated uppers 96, 216, 460; lowers 84, 196, 400",
        pass: all_pass(&checks) && checks.len() == 6,
        detail: describe(&checks),
        elapsed,
    }
}

/// Minimum distance to all 2^22 words of RM(2,6), from scratch.
fn rm26_distance(f: u64) -> u32 {
    let monomial = |vars: &[usize]| -> u64 {
        (0..64u64).fold(0, |acc, x| {
            acc | (vars.iter().all(|&v| x >> (v - 1) & 1 == 1) as u64) << x
        })
    };
    let mut generators = vec![monomial(&[])];
    generators.extend((1..=6).map(|i| monomial(&[i])));
    for i in 1..=6 {
        generators.extend((i + 1..=6).map(|j| monomial(&[i, j])));
    }
    let mut word = 0u64;
    let mut best = f.count_ones();
    for k in 1u32..1 << 22 {
        word ^= generators[k.trailing_zeros() as usize];
        best = best.min((f ^ word).count_ones());
    }
    best
}

fn criterion_8() -> Line {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut parts = Vec::new();

    let parseval = (0..100).all(|k| {
        let f = TruthTable::random(3 + k % 5, &mut rng).unwrap();
        fwht(&f).energy() == 1i64 << (2 * f.n())
    });
    parts.push(("Parseval x100", parseval));

    let mut invariant = true;
    for i in 1..=12 {
        let f = named(&format!("fun{i}")).unwrap();
        let reference = nfh_spectrum(&f);
        for _ in 0..20 {
            let map = AffineMap::random_with(6, &mut rng).unwrap();
            invariant &= nfh_spectrum(&map.apply(&f).unwrap()) == reference;
        }
    }
    parts.push(("NFh affine invariance 20x12", invariant));

    let mut oracle_inputs: Vec<TruthTable> = ["g0", "fun1", "fun6", "fun12"]
        .iter()
        .map(|n| named(n).unwrap())
        .collect();
    oracle_inputs.extend((0..4).map(|_| TruthTable::random(6, &mut rng).unwrap()));
    let oracle = oracle_inputs
        .iter()
        .all(|f| nl2(f) == rm26_distance(f.bits() as u64));
    parts.push(("nl2 vs 2^22-codeword enumeration x8", oracle));

    let concat = check_concat_bound_samples(10, DEFAULT_SEED).expect("concat checks run");
    let random: Vec<&CheckResult> = concat
        .iter()
        .filter(|r| r.check_id.starts_with("concat.random"))
        .collect();
    parts.push((
        "concat bound x10 (full n=7 scans)",
        random.len() == 10 && all_pass(&random),
    ));

    let run = |threads: usize| {
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
            .to_json()
        })
    };
    parts.push(("bit-identical JSON at 1 and 4 threads", run(1) == run(4)));

    let detail: Vec<String> = parts
        .iter()
        .map(|(name, ok)| format!("{name}: {}", if *ok { "ok" } else { "FAILED" }))
        .collect();
    Line {
        number: 8,
        title: "property suites",
        pass: parts.iter().all(|(_, ok)| *ok),
        detail: detail.join("; "),
        elapsed: start.elapsed(),
    }
}

fn criterion_9() -> Line {
    let start = Instant::now();
    let config = VerifyConfig {
        record_timings: false,
        ..VerifyConfig::default()
    };
    let constants = run_expectation_controls(&config).expect("controls run");
    let fixtures = run_fixture_controls(&config).expect("controls run");
    let silent: Vec<String> = constants
        .iter()
        .chain(&fixtures)
        .filter(|o| !o.reacted)
        .map(|o| o.label.clone())
        .collect();
    let inverted = constants
        .iter()
        .filter(|o| o.baseline == Some(Status::Fail))
        .count();
    Line {
        number: 9,
        title: "negative controls: each fixture and each stated constant",
        pass: silent.is_empty(),
        detail: format!(
            "{} constant and {} fixture perturbations; {} caught by flipping pass to fail, {} \
by flipping an already-failing check to pass on its computed value; silent: [{}]",
            constants.len(),
            fixtures.len(),
            constants.len() + fixtures.len() - inverted - silent.len(),
            inverted,
            silent.join(", ")
        ),
        elapsed: start.elapsed(),
    }
}

fn main() -> ExitCode {
    let criteria: [fn() -> Line; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut failed = 0;
    for criterion in criteria {
        let line = criterion();
        let status = if line.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {status} ({:.2} s) {}: {}",
            line.number,
            line.elapsed.as_secs_f64(),
            line.title,
            line.detail
        );
        failed += usize::from(!line.pass);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
