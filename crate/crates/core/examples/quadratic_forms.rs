//! Quadratic forms: coefficient layout and Gray-code enumeration.
//!
//! `cargo run --example quadratic_forms`

use rmcover::quadratic::explain_layout;
use rmcover::{enumerate_quadratics, QuadraticForm, Result};

fn main() -> Result<()> {
    print!("{}", explain_layout(4)?);

    // consecutive forms differ in exactly one coefficient
    for q in enumerate_quadratics(4)?.take(8) {
        println!("{:>6}  {}", q.to_hex(), q);
    }

    let q = QuadraticForm::parse(6, "12+35+46")?;
    println!(
        "\n{} has mask {} and truth table {}",
        q,
        q.to_hex(),
        q.to_truth_table().to_hex()
    );
    println!("forms in 6 variables: {}", enumerate_quadratics(6)?.count());
    Ok(())
}
