use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::{MAX_VARS, MIN_VARS};

/// Output column of an `n`-variable Boolean function, `n <= 7`.
///
/// Bit `i` holds `f(x)` for the point whose coordinates are the binary digits
/// of `i`, with `x1` in the least-significant position. A 7-variable table
/// fills a `u128` exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u8,
    bits: u128,
}

/// Mask covering the `2^n` valid positions.
#[inline]
pub(crate) const fn domain_mask(n: usize) -> u128 {
    if n >= 7 {
        u128::MAX
    } else {
        (1u128 << (1usize << n)) - 1
    }
}

/// Table of the coordinate function `x_{var+1}` (0-based `var`), unmasked.
#[inline]
pub(crate) const fn coordinate_bits(var: usize) -> u128 {
    const COORDS: [u128; 7] = [
        0xAAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC_CCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0_F0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00_FF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000_FFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000_FFFF_FFFF_0000_0000,
        0xFFFF_FFFF_FFFF_FFFF_0000_0000_0000_0000,
    ];
    COORDS[var]
}

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if (MIN_VARS..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

pub(crate) fn check_same(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::MismatchedVars { left: a, right: b })
    }
}

impl TruthTable {
    pub fn new(n: usize, bits: u128) -> Result<Self> {
        check_vars(n)?;
        if bits & !domain_mask(n) != 0 {
            return Err(Error::TableOverflow { n });
        }
        Ok(Self::from_raw(n, bits))
    }

    /// Caller guarantees `n` is in range; stray high bits are dropped.
    #[inline]
    pub(crate) const fn from_raw(n: usize, bits: u128) -> Self {
        Self {
            n: n as u8,
            bits: bits & domain_mask(n),
        }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn one(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self::from_raw(n, domain_mask(n)))
    }

    /// Coordinate function `x_var` with 1-based `var`.
    pub fn variable(n: usize, var: usize) -> Result<Self> {
        check_vars(n)?;
        if var == 0 || var > n {
            return Err(Error::VariableIndex { index: var, n });
        }
        Ok(Self::from_raw(n, coordinate_bits(var - 1)))
    }

    /// Linear function `a·x`; bit `j` of `mask` selects `x_{j+1}`.
    pub fn linear(n: usize, mask: usize) -> Result<Self> {
        check_vars(n)?;
        if mask >> n != 0 {
            return Err(Error::VariableIndex {
                index: (usize::BITS - mask.leading_zeros()) as usize,
                n,
            });
        }
        let bits = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .fold(0u128, |acc, j| acc ^ coordinate_bits(j));
        Ok(Self::from_raw(n, bits))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_vars(n)?;
        let bits = (0..1usize << n)
            .filter(|&x| f(x))
            .fold(0u128, |acc, x| acc | 1u128 << x);
        Ok(Self::from_raw(n, bits))
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_vars(n)?;
        Ok(Self::from_raw(n, rng.gen::<u128>()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn complement(&self) -> Self {
        Self::from_raw(self.n(), !self.bits)
    }

    /// Pointwise sum over GF(2).
    pub fn xor(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        Ok(Self::from_raw(self.n(), self.bits ^ other.bits))
    }

    /// Pointwise product over GF(2).
    pub fn and(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        Ok(Self::from_raw(self.n(), self.bits & other.bits))
    }

    /// Hamming distance, the weight of `self + other`.
    pub fn distance(&self, other: &Self) -> Result<u32> {
        check_same(self.n(), other.n())?;
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// `(x_{n+1}+1)·low + x_{n+1}·high`: `low` fills the lower half of the
    /// index space and `high` the upper half.
    pub fn concat(low: &Self, high: &Self) -> Result<Self> {
        check_same(low.n(), high.n())?;
        let n = low.n();
        check_vars(n + 1)?;
        let half = 1usize << n;
        Ok(Self::from_raw(n + 1, low.bits | high.bits << half))
    }

    /// Restrictions to `x_n = 0` and `x_n = 1`, as `(n-1)`-variable tables.
    pub fn split(&self) -> Result<(Self, Self)> {
        let n = self.n();
        check_vars(n - 1)?;
        let half = 1usize << (n - 1);
        let low = Self::from_raw(n - 1, self.bits);
        let high = Self::from_raw(n - 1, self.bits >> half);
        Ok((low, high))
    }

    /// Fixed-width lower-case hex, most-significant digit first.
    pub fn to_hex(&self) -> String {
        let digits = self.hex_digits();
        format!("{:0width$x}", self.bits, width = digits)
    }

    pub fn from_hex(n: usize, text: &str) -> Result<Self> {
        check_vars(n)?;
        let text = text.trim();
        let text = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .unwrap_or(text);
        let expected = (1usize << n).div_ceil(4);
        if text.len() != expected {
            return Err(Error::HexLength {
                n,
                expected,
                got: text.len(),
            });
        }
        let mut bits = 0u128;
        for (position, ch) in text.chars().enumerate() {
            let digit = ch.to_digit(16).ok_or_else(|| Error::Parse {
                token: ch.to_string(),
                position,
                reason: "not a hex digit".into(),
            })?;
            bits = bits << 4 | digit as u128;
        }
        Self::new(n, bits)
    }

    /// Infers `n` from the digit count.
    pub fn from_hex_auto(text: &str) -> Result<Self> {
        let digits = text.trim().trim_start_matches("0x").len();
        let n = (MIN_VARS..=MAX_VARS)
            .find(|&n| (1usize << n).div_ceil(4) == digits)
            .ok_or(Error::HexLength {
                n: 0,
                expected: 0,
                got: digits,
            })?;
        Self::from_hex(n, text)
    }

    fn hex_digits(&self) -> usize {
        self.len().div_ceil(4)
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, 0x{})", self.n, self.to_hex())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_variable_counts() {
        assert_eq!(TruthTable::zero(2), Err(Error::VariableCount(2)));
        assert_eq!(TruthTable::zero(8), Err(Error::VariableCount(8)));
        assert!(TruthTable::new(3, 1 << 8).is_err());
    }

    #[test]
    fn weight_of_complement() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in MIN_VARS..=MAX_VARS {
            let f = TruthTable::random(n, &mut rng).unwrap();
            assert_eq!(f.weight() + f.complement().weight(), 1 << n);
        }
    }

    #[test]
    fn distance_basics() {
        let zero = TruthTable::zero(6).unwrap();
        let one = TruthTable::one(6).unwrap();
        assert_eq!(zero.distance(&one).unwrap(), 64);
        assert_eq!(one.distance(&one).unwrap(), 0);
        let f = TruthTable::variable(6, 3).unwrap();
        assert_eq!(f.distance(&zero).unwrap(), f.weight());
        let g = TruthTable::zero(7).unwrap();
        assert!(matches!(
            f.distance(&g),
            Err(Error::MismatchedVars { left: 6, right: 7 })
        ));
    }

    #[test]
    fn x1_plus_x2_on_three_vars() {
        let f = TruthTable::linear(3, 0b011).unwrap();
        assert_eq!(f.bits(), 0b0110_0110);
        for x in 0..8 {
            assert_eq!(f.get(x), (x & 1) ^ (x >> 1 & 1) == 1);
        }
    }

    #[test]
    fn concat_halves() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = TruthTable::random(6, &mut rng).unwrap();
        let b = TruthTable::random(6, &mut rng).unwrap();
        let c = TruthTable::concat(&a, &b).unwrap();
        assert_eq!(c.n(), 7);
        assert_eq!(c.weight(), a.weight() + b.weight());
        assert_eq!(c.split().unwrap(), (a, b));

        let same = TruthTable::concat(&a, &a).unwrap();
        let x7 = TruthTable::variable(7, 7).unwrap();
        for x in 0..64 {
            assert_eq!(same.get(x), same.get(x | 64));
        }
        assert_eq!(x7.weight(), 64);

        let z = TruthTable::zero(6).unwrap();
        assert!(TruthTable::concat(&z, &z).unwrap().is_zero());
        assert!(TruthTable::concat(&c, &c).is_err());
    }

    #[test]
    fn hex_layout() {
        let f = TruthTable::variable(3, 3).unwrap();
        assert_eq!(f.to_hex(), "f0");
        assert_eq!(TruthTable::from_hex(3, "f0").unwrap(), f);
        let one = TruthTable::one(7).unwrap();
        assert_eq!(one.to_hex(), "f".repeat(32));
        assert!(matches!(
            TruthTable::from_hex(7, "ff"),
            Err(Error::HexLength { expected: 32, .. })
        ));
        assert!(matches!(
            TruthTable::from_hex(3, "g0"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert_eq!(TruthTable::from_hex_auto(&"0".repeat(16)).unwrap().n(), 6);
    }
}
