//! Search for a 7-variable function at distance 40 from RM(2,7).
//!
//! `cargo run --example witness_search -- [budget] [seed]`

use rmcover::verify::{search_witness, DEFAULT_SEED, DEFAULT_WITNESS_BUDGET};
use rmcover::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let budget = args
        .next()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_WITNESS_BUDGET);
    let seed = args
        .next()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let search = search_witness(budget, seed)?;
    println!("{}", search.summary());
    if let Some(c) = &search.certificate {
        println!("truth table {}", c.hex);
    }
    Ok(())
}
