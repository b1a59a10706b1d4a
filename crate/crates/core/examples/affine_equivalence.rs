//! Affine maps x -> Ax + b and the invariants they preserve.
//!
//! `cargo run --example affine_equivalence`

use rmcover::verify::fixtures::named;
use rmcover::{degree, nfh_spectrum, nl2, nonlinearity, AffineMap, Result};

fn main() -> Result<()> {
    let f = named("fun4").expect("built-in fixture");
    let reference = nfh_spectrum(&f);
    for seed in 0..5 {
        let map = AffineMap::random(6, seed)?;
        let g = map.apply(&f)?;
        println!(
            "seed {seed}: table {}  deg {}  nl {}  nl2 {}  same NFh histogram: {}",
            g.to_hex(),
            degree(&g),
            nonlinearity(&g),
            nl2(&g),
            nfh_spectrum(&g) == reference
        );
        assert_eq!(map.inverse().apply(&g)?, f);
    }
    Ok(())
}
