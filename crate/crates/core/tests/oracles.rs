//! Independent recomputations that share no code with the library scans.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmcover::secondorder::nl2_by_halves;
use rmcover::verify::fixtures::named;
use rmcover::{concat_nl2_upper_bound, nl2, nonlinearity, TruthTable};

/// Truth table of a monomial over six variables, x1 as the low index bit.
fn monomial6(vars: &[usize]) -> u64 {
    (0..64u64).fold(0, |acc, x| {
        let on = vars.iter().all(|&v| x >> (v - 1) & 1 == 1);
        acc | (on as u64) << x
    })
}

/// Minimum distance to all 2^22 codewords of RM(2,6), visited in Gray order.
fn rm26_distance(f: u64) -> u32 {
    let mut generators = vec![monomial6(&[])];
    for i in 1..=6 {
        generators.push(monomial6(&[i]));
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            generators.push(monomial6(&[i, j]));
        }
    }
    assert_eq!(generators.len(), 22);
    let mut word = 0u64;
    let mut best = (f ^ word).count_ones();
    for k in 1u32..1 << 22 {
        word ^= generators[k.trailing_zeros() as usize];
        best = best.min((f ^ word).count_ones());
    }
    best
}

#[test]
fn nl2_matches_direct_codeword_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut inputs: Vec<TruthTable> = ["g0", "fun1", "fun5", "fun6", "fun12"]
        .iter()
        .map(|name| named(name).unwrap())
        .collect();
    inputs.extend((0..3).map(|_| TruthTable::random(6, &mut rng).unwrap()));
    for f in inputs {
        assert_eq!(nl2(&f), rm26_distance(f.bits() as u64), "{f}");
    }
}

#[test]
fn nonlinearity_matches_affine_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let f = TruthTable::random(6, &mut rng).unwrap();
        let bits = f.bits() as u64;
        let mut best = u32::MAX;
        for a in 0..64u64 {
            let linear = (0..64u64).fold(0u64, |acc, x| {
                acc | (((a & x).count_ones() & 1) as u64) << x
            });
            best = best
                .min((bits ^ linear).count_ones())
                .min((bits ^ !linear).count_ones());
        }
        assert_eq!(nonlinearity(&f), best);
    }
}

#[test]
fn concat_bound_is_attained_by_the_half_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2 {
        let f1 = TruthTable::random(6, &mut rng).unwrap();
        let f2 = TruthTable::random(6, &mut rng).unwrap();
        let f = TruthTable::concat(&f1, &f2).unwrap();
        let bound = concat_nl2_upper_bound(&f1, &f2).unwrap();
        let full = nl2(&f);
        assert!(full <= bound);
        assert_eq!(full, nl2_by_halves(&f).unwrap());
    }
}
