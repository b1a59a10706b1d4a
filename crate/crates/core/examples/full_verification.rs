//! The whole claim-by-claim pipeline, as text or JSON.
//!
//! `cargo run --example full_verification -- [--json]`

use rmcover::verify::{run_full_verification, VerifyConfig};
use rmcover::Result;

fn main() -> Result<()> {
    let report = run_full_verification(VerifyConfig::default())?;
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}
