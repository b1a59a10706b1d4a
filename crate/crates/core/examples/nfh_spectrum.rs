//! NFh histograms of the twelve representatives.
//!
//! `cargo run --example nfh_spectrum`

use rmcover::nfh_spectrum;
use rmcover::verify::fixtures::named;

fn main() {
    for i in 1..=12 {
        let f = named(&format!("fun{i}")).expect("built-in fixture");
        let spectrum = nfh_spectrum(&f);
        let buckets: Vec<String> = spectrum
            .nonzero()
            .map(|(r, c)| format!("{r}:{c}"))
            .collect();
        println!("fun{i:<2}  {}", buckets.join("  "));
    }
}
