use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::truth_table::{check_same, check_vars, TruthTable};

/// Invertible affine substitution `x ↦ Ax + b` over GF(2)^n.
///
/// Row `i` of `A` is stored as a bitmask, so `(Ax)_i = parity(rows[i] & x)`.
/// Acting on a function yields `x ↦ f(Ax + b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    n: u8,
    rows: [u8; 7],
    shift: u8,
}

fn rank(rows: &[u8]) -> usize {
    let mut rows: Vec<u8> = rows.to_vec();
    let mut rank = 0;
    for bit in 0..8 {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

impl AffineMap {
    pub fn new(n: usize, rows: &[u8], shift: u8) -> Result<Self> {
        check_vars(n)?;
        if rows.len() != n {
            return Err(Error::MismatchedVars {
                left: n,
                right: rows.len(),
            });
        }
        let limit = 1u16 << n;
        if rows.iter().any(|&r| r as u16 >= limit) || shift as u16 >= limit {
            return Err(Error::VariableIndex { index: n + 1, n });
        }
        if rank(rows) != n {
            return Err(Error::SingularMatrix);
        }
        let mut packed = [0u8; 7];
        packed[..n].copy_from_slice(rows);
        Ok(Self {
            n: n as u8,
            rows: packed,
            shift,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows: Vec<u8> = (0..n).map(|i| 1u8 << i).collect();
        Self::new(n, &rows, 0)
    }

    /// Uniform over the affine group: `A` by rejection sampling, `b` uniform.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(n, &mut rng)
    }

    pub fn random_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_vars(n)?;
        let mask = ((1u16 << n) - 1) as u8;
        loop {
            let rows: Vec<u8> = (0..n).map(|_| rng.gen::<u8>() & mask).collect();
            if rank(&rows) == n {
                return Self::new(n, &rows, rng.gen::<u8>() & mask);
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows[..self.n()]
    }

    pub fn shift(&self) -> u8 {
        self.shift
    }

    /// Image of the point `x` (bit `j` is `x_{j+1}`).
    #[inline]
    pub fn map_point(&self, x: usize) -> usize {
        let linear = self
            .rows()
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &row)| {
                acc | ((row as usize & x).count_ones() as usize & 1) << i
            });
        linear ^ self.shift as usize
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        // Gauss-Jordan on [A | I]
        let mut left: Vec<u8> = self.rows().to_vec();
        let mut right: Vec<u8> = (0..n).map(|i| 1u8 << i).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| left[r] >> col & 1 == 1)
                .expect("matrix checked invertible at construction");
            left.swap(col, pivot);
            right.swap(col, pivot);
            for r in 0..n {
                if r != col && left[r] >> col & 1 == 1 {
                    left[r] ^= left[col];
                    right[r] ^= right[col];
                }
            }
        }
        let linear = Self {
            n: self.n,
            rows: {
                let mut packed = [0u8; 7];
                packed[..n].copy_from_slice(&right);
                packed
            },
            shift: 0,
        };
        let shift = linear.map_point(self.shift as usize) as u8;
        Self { shift, ..linear }
    }

    /// `x ↦ f(Ax + b)`.
    pub fn apply(&self, f: &TruthTable) -> Result<TruthTable> {
        check_same(self.n(), f.n())?;
        TruthTable::from_fn(f.n(), |x| f.get(self.map_point(x)))
    }
}

/// `apply_affine(f, m)`: `x ↦ f(Ax + b)`.
pub fn apply_affine(f: &TruthTable, map: &AffineMap) -> Result<TruthTable> {
    map.apply(f)
}

pub fn random_affine(n: usize, seed: u64) -> Result<AffineMap> {
    AffineMap::random(n, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::degree;

    #[test]
    fn singular_rejected() {
        assert_eq!(
            AffineMap::new(3, &[0b001, 0b010, 0b011], 0),
            Err(Error::SingularMatrix)
        );
        assert!(AffineMap::new(3, &[0b001, 0b010, 0b100], 0).is_ok());
    }

    #[test]
    fn identity_is_noop() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = TruthTable::random(6, &mut rng).unwrap();
        assert_eq!(AffineMap::identity(6).unwrap().apply(&f).unwrap(), f);
    }

    #[test]
    fn deterministic_and_invertible() {
        assert_eq!(random_affine(6, 42).unwrap(), random_affine(6, 42).unwrap());
        for seed in 0..100 {
            let m = random_affine(6, seed).unwrap();
            assert_eq!(rank(m.rows()), 6);
        }
    }

    #[test]
    fn inverse_undoes_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for seed in 0..20 {
            let m = random_affine(7, seed).unwrap();
            let inv = m.inverse();
            for x in 0..128 {
                assert_eq!(m.map_point(inv.map_point(x)), x);
            }
            let f = TruthTable::random(7, &mut rng).unwrap();
            let back = inv.apply(&m.apply(&f).unwrap()).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn preserves_weight_and_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for seed in 0..20 {
            let f = TruthTable::random(6, &mut rng).unwrap();
            let m = random_affine(6, seed).unwrap();
            let g = apply_affine(&f, &m).unwrap();
            assert_eq!(g.weight(), f.weight());
            assert_eq!(degree(&g), degree(&f));
        }
    }

    #[test]
    fn dimension_mismatch() {
        let m = random_affine(6, 1).unwrap();
        let f = TruthTable::zero(7).unwrap();
        assert!(m.apply(&f).is_err());
    }
}
