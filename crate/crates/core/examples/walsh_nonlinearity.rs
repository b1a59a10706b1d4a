//! Walsh–Hadamard spectrum and first-order nonlinearity.
//!
//! `cargo run --example walsh_nonlinearity`

use rmcover::verify::fixtures::named;
use rmcover::{fwht, nonlinearity, AnfTermSet, Result};

fn main() -> Result<()> {
    // x1x2 + x3x4 + x5x6 is bent: every |W| equals 8
    let bent = AnfTermSet::parse(6, "12+34+56")?.to_truth_table();
    let spectrum = fwht(&bent);
    println!(
        "bent: max |W| = {}, nl = {}",
        spectrum.max_abs(),
        nonlinearity(&bent)
    );
    println!("Parseval: sum W^2 = {} = 2^12", spectrum.energy());

    for name in ["g0", "fun1", "fun6", "fun12"] {
        let f = named(name).expect("built-in fixture");
        println!(
            "{name:>5}: nl = {:>2}, max |W| = {}",
            nonlinearity(&f),
            fwht(&f).max_abs()
        );
    }
    Ok(())
}
