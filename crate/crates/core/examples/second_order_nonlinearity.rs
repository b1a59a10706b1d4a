//! Second-order nonlinearity by exhaustive coset scan.
//!
//! `cargo run --example second_order_nonlinearity -- "123+145+167+246+356+456"`

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmcover::{nl2, AnfTermSet, CosetProfile, Result, TruthTable};

fn main() -> Result<()> {
    let text = std::env::args().nth(1);
    let f = match &text {
        Some(t) => {
            let n = AnfTermSet::infer_vars(t).unwrap_or(6);
            AnfTermSet::parse(n, t)?.to_truth_table()
        }
        None => rmcover::verify::fixtures::named("g0").expect("built-in fixture"),
    };
    let start = Instant::now();
    let value = nl2(&f);
    println!("nl2 = {value} (n = {}, {:.2?})", f.n(), start.elapsed());

    // the per-form profile behind the scan
    let profile = CosetProfile::compute(&f);
    println!(
        "min/max nl(f + q) over {} forms: {} / {}",
        profile.values().len(),
        profile.min(),
        profile.max()
    );

    if f.n() == 7 {
        let (low, high) = f.split()?;
        println!("halves: nl2 = {} and {}", nl2(&low), nl2(&high));
    } else {
        let random = TruthTable::random(f.n(), &mut ChaCha8Rng::seed_from_u64(1))?;
        println!(
            "a random {}-variable function: nl2 = {}",
            f.n(),
            nl2(&random)
        );
    }
    Ok(())
}
