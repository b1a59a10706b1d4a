//! Upper bounds for RM(2,n), n = 8..10, propagated from cr(RM(2,7)) = 40.
//!
//! `cargo run --example bound_propagation`

use rmcover::verify::bounds::RM1_UPPER_BOUNDS;
use rmcover::verify::propagate_bounds;

fn main() {
    let table = propagate_bounds(40);
    print!("{}", table.to_text());
    println!("first-order steps used: {RM1_UPPER_BOUNDS:?}");
    println!("consistent: {}", table.is_consistent(40));
}
