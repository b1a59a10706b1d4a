//! Walsh–Hadamard spectrum and first-order nonlinearity.

use crate::truth_table::TruthTable;

/// `values[a] = Σ_x (-1)^(f(x) + a·x)` for every linear mask `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn max_abs(&self) -> i32 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// `Σ values[a]^2`, which must equal `2^(2n)`.
    pub fn energy(&self) -> i64 {
        self.values.iter().map(|&v| v as i64 * v as i64).sum()
    }
}

#[inline(always)]
fn butterfly(values: &mut [i32]) {
    let len = values.len();
    let mut h = 1;
    while h < len {
        for block in values.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

#[inline(always)]
fn signs(bits: u128, out: &mut [i32]) {
    for (x, v) in out.iter_mut().enumerate() {
        *v = 1 - 2 * ((bits >> x) as i32 & 1);
    }
}

/// Largest `|W_f(a)|` over all `a`, for a packed table on `n` variables.
#[inline]
pub(crate) fn max_abs_walsh(bits: u128, n: usize) -> i32 {
    let mut buf = [0i32; 128];
    let values = &mut buf[..1 << n];
    signs(bits, values);
    butterfly(values);
    values.iter().fold(0, |m, v| m.max(v.abs()))
}

/// Nonlinearity of a packed table: `2^(n-1) - max|W|/2`.
#[inline]
pub(crate) fn nonlinearity_bits(bits: u128, n: usize) -> u32 {
    ((1i32 << (n - 1)) - max_abs_walsh(bits, n) / 2) as u32
}

pub fn fwht(f: &TruthTable) -> WalshSpectrum {
    let mut values = vec![0i32; f.len()];
    signs(f.bits(), &mut values);
    butterfly(&mut values);
    WalshSpectrum { n: f.n(), values }
}

/// Distance to the nearest affine function.
pub fn nonlinearity(f: &TruthTable) -> u32 {
    nonlinearity_bits(f.bits(), f.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfTermSet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_nl(f: &TruthTable) -> u32 {
        let n = f.n();
        let mut best = u32::MAX;
        for a in 0..1usize << n {
            let l = TruthTable::linear(n, a).unwrap();
            let d = f.distance(&l).unwrap();
            best = best.min(d).min((1 << n) - d);
        }
        best
    }

    #[test]
    fn zero_and_linear_spectra() {
        let z = fwht(&TruthTable::zero(6).unwrap());
        assert_eq!(z.values()[0], 64);
        assert!(z.values()[1..].iter().all(|&v| v == 0));
        for a in [1usize, 5, 42, 63] {
            let w = fwht(&TruthTable::linear(6, a).unwrap());
            for (b, &v) in w.values().iter().enumerate() {
                assert_eq!(v, if b == a { 64 } else { 0 });
            }
        }
    }

    #[test]
    fn bent_is_flat() {
        let bent = AnfTermSet::parse(6, "12+34+56").unwrap().to_truth_table();
        assert!(fwht(&bent).values().iter().all(|v| v.abs() == 8));
        assert_eq!(nonlinearity(&bent), 28);
    }

    #[test]
    fn x1x2_on_six_vars() {
        let f = AnfTermSet::parse(6, "12").unwrap().to_truth_table();
        assert_eq!(brute_nl(&f), 16);
        assert_eq!(nonlinearity(&f), 16);
    }

    #[test]
    fn affine_functions_have_zero_nl() {
        for a in 0..64 {
            let l = TruthTable::linear(6, a).unwrap();
            assert_eq!(nonlinearity(&l), 0);
            assert_eq!(nonlinearity(&l.complement()), 0);
        }
    }

    #[test]
    fn matches_brute_force_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..=7 {
            for _ in 0..10 {
                let f = TruthTable::random(n, &mut rng).unwrap();
                let w = fwht(&f);
                assert_eq!(w.energy(), 1i64 << (2 * n));
                assert!(w.values().iter().all(|v| v % 2 == 0));
                assert_eq!(nonlinearity(&f), brute_nl(&f));
            }
        }
    }
}
