//! nl2(f1 || f2) against min_q [nl(f1 + q) + nl(f2 + q)].
//!
//! `cargo run --example concatenation_bound`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmcover::secondorder::nl2_by_halves;
use rmcover::{concat_nl2_upper_bound, nl2, Result, TruthTable};

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let f1 = TruthTable::random(6, &mut rng)?;
        let f2 = TruthTable::random(6, &mut rng)?;
        let f = TruthTable::concat(&f1, &f2)?;
        let bound = concat_nl2_upper_bound(&f1, &f2)?;
        let full = nl2(&f);
        println!(
            "full scan {full}, half-split bound {bound}, halves route {}",
            nl2_by_halves(&f)?
        );
    }
    Ok(())
}
