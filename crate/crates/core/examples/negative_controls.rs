//! Perturb each fixture and each stated constant; every one must be caught.
//!
//! `cargo run --example negative_controls`

use rmcover::verify::controls::{run_expectation_controls, run_fixture_controls};
use rmcover::verify::VerifyConfig;
use rmcover::Result;

fn main() -> Result<()> {
    let config = VerifyConfig {
        record_timings: false,
        ..VerifyConfig::default()
    };
    let outcomes = run_expectation_controls(&config)?
        .into_iter()
        .chain(run_fixture_controls(&config)?);
    let mut silent = 0;
    for o in outcomes {
        let mark = if o.reacted { "caught" } else { "SILENT" };
        silent += usize::from(!o.reacted);
        println!("{mark:>6}  {:<28} {}", o.label, o.check_id);
    }
    println!("{silent} silent perturbations");
    Ok(())
}
