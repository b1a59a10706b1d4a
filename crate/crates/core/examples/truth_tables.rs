//! Truth tables: construction, hex round trips, concatenation.
//!
//! `cargo run --example truth_tables`

use rmcover::{Result, TruthTable};

fn main() -> Result<()> {
    // x1 is the least-significant index bit
    let x1 = TruthTable::variable(3, 1)?;
    let x3 = TruthTable::variable(3, 3)?;
    let f = x1.and(&x3)?.xor(&TruthTable::variable(3, 2)?)?;
    println!(
        "f = x1x3 + x2 on 3 variables: hex {}  weight {}",
        f.to_hex(),
        f.weight()
    );

    let g = TruthTable::from_fn(4, |x| x.count_ones() >= 2)?;
    println!("majority-ish on 4 variables: {}", g.to_hex());
    assert_eq!(TruthTable::from_hex(4, &g.to_hex())?, g);

    // f || f' puts f on x4 = 0 and f' on x4 = 1
    let h = TruthTable::concat(&f, &f.complement())?;
    let (low, high) = h.split()?;
    println!(
        "concat: {} (n = {}), halves {} / {}",
        h.to_hex(),
        h.n(),
        low.to_hex(),
        high.to_hex()
    );
    println!("distance(f, complement) = {}", f.distance(&f.complement())?);
    Ok(())
}
