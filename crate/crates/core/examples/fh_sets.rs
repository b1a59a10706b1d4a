//! Fh sets, S16 membership, shifted counts and pair profiles.
//!
//! `cargo run --example fh_sets`

use rmcover::secondorder::{pair_degrees, s16_members, shifted_s16_members};
use rmcover::verify::fixtures::named;
use rmcover::{fh_set, pair_profile, s16_count, Result};

fn main() -> Result<()> {
    let fun2 = named("fun2").expect("built-in fixture");
    let set = fh_set(&fun2, 16)?;
    println!(
        "|Fh_fun2(16)| = {}, S16 members = {}",
        set.len(),
        s16_count(&set)
    );

    let h = s16_members(set.members());
    let degrees = pair_degrees(&h);
    println!("pair degrees inside the S16 part: {degrees:?}");
    println!("members with pair degree >= 13: {}", pair_profile(&h, 13));

    let shifted = fh_set(&fun2, 26)?;
    let g = shifted.members()[0];
    let moved = shifted_s16_members(&g, shifted.members());
    println!("|(g + Fh_fun2(26)) ∩ S16| = {} for g = {g}", moved.len());
    Ok(())
}
