//! Algebraic normal form via the Möbius transform.
//!
//! `cargo run --example anf -- "1234+126+145+235" 6`

use rmcover::{degree, AnfTermSet, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "123+145+246+356+456".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);

    let anf = AnfTermSet::parse(n, &text)?;
    let f = anf.to_truth_table();
    println!("ANF      {anf}");
    println!("table    {}", f.to_hex());
    println!("degree   {}", degree(&f));
    println!("weight   {}", f.weight());

    // the transform is an involution: table -> ANF -> table
    let back = AnfTermSet::from_truth_table(&f);
    assert_eq!(back, anf);
    println!("terms    {:?}", back.terms());
    Ok(())
}
