//! Homogeneous quadratic forms `Σ_{i<j} a_ij x_i x_j` and their enumeration.
//!
//! Coefficient bit `k` belongs to the `k`-th pair `(i, j)`, `i < j`, in
//! lexicographic order: `(1,2), (1,3), …, (1,n), (2,3), …`. For `n = 6` the
//! 15 pairs fit a 15-bit mask; for `n = 7` the 21 pairs fit 21 bits.
//!
//! Text format: pairs joined by `+` (`12+35+46`), `0` for the zero form, or a
//! hex mask prefixed with `0x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::truth_table::{check_same, check_vars, coordinate_bits, TruthTable};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    n: u8,
    coeffs: u32,
}

/// Number of coefficients, `n(n-1)/2`.
pub const fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// `(i, j)` pairs, 1-based, in coefficient-bit order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Coefficient bit of the pair `(i, j)`, 1-based, `i < j`.
pub fn pair_index(n: usize, i: usize, j: usize) -> Option<usize> {
    if i == 0 || i >= j || j > n {
        return None;
    }
    // pairs before row i: Σ_{r<i} (n - r)
    let before: usize = (1..i).map(|r| n - r).sum();
    Some(before + (j - i - 1))
}

/// Truth tables of the monomials `x_i x_j`, indexed by coefficient bit.
pub(crate) fn monomial_tables(n: usize) -> Vec<u128> {
    pairs(n)
        .into_iter()
        .map(|(i, j)| coordinate_bits(i - 1) & coordinate_bits(j - 1))
        .map(|bits| TruthTable::from_raw(n, bits).bits())
        .collect()
}

/// Table of the form with coefficient mask `coeffs`.
pub(crate) fn table_of(n: usize, coeffs: u32, monomials: &[u128]) -> u128 {
    let mut bits = 0u128;
    let mut rest = coeffs;
    while rest != 0 {
        bits ^= monomials[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    TruthTable::from_raw(n, bits).bits()
}

#[inline]
pub(crate) const fn gray(k: u32) -> u32 {
    k ^ (k >> 1)
}

impl QuadraticForm {
    pub fn new(n: usize, coeffs: u32) -> Result<Self> {
        check_vars(n)?;
        if coeffs as u64 >> pair_count(n) != 0 {
            return Err(Error::Parse {
                token: format!("{coeffs:#x}"),
                position: 0,
                reason: format!("mask exceeds {} pair coefficients", pair_count(n)),
            });
        }
        Ok(Self::from_raw(n, coeffs))
    }

    #[inline]
    pub(crate) const fn from_raw(n: usize, coeffs: u32) -> Self {
        Self { n: n as u8, coeffs }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn from_pairs(n: usize, list: &[(usize, usize)]) -> Result<Self> {
        check_vars(n)?;
        let mut coeffs = 0u32;
        for &(i, j) in list {
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            let k = pair_index(n, i, j).ok_or(Error::VariableIndex { index: j.max(i), n })?;
            coeffs ^= 1 << k;
        }
        Ok(Self::from_raw(n, coeffs))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn coeffs(&self) -> u32 {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.n())
            .into_iter()
            .enumerate()
            .filter(|(k, _)| self.coeffs >> k & 1 == 1)
            .map(|(_, p)| p)
            .collect()
    }

    /// Coefficient-wise sum.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        Ok(Self::from_raw(self.n(), self.coeffs ^ other.coeffs))
    }

    pub fn to_truth_table(&self) -> TruthTable {
        let n = self.n();
        TruthTable::from_raw(n, table_of(n, self.coeffs, &monomial_tables(n)))
    }

    pub fn to_hex(&self) -> String {
        format!(
            "0x{:0width$x}",
            self.coeffs,
            width = pair_count(self.n()).div_ceil(4)
        )
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_vars(n)?;
        let trimmed = text.trim();
        if let Some(hex) = trimmed
            .strip_prefix("0x")
            .or_else(|| trimmed.strip_prefix("0X"))
        {
            let coeffs = u32::from_str_radix(hex, 16).map_err(|e| Error::Parse {
                token: hex.to_string(),
                position: 2,
                reason: e.to_string(),
            })?;
            return Self::new(n, coeffs);
        }
        if trimmed == "0" {
            return Self::zero(n);
        }
        let mut coeffs = 0u32;
        let mut offset = 0;
        for raw in text.split('+') {
            let token = raw.trim();
            let position = offset + raw.len() - raw.trim_start().len();
            offset += raw.len() + 1;
            let err = |reason: String| Error::Parse {
                token: token.to_string(),
                position,
                reason,
            };
            let digits: Vec<usize> = token
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| err("expected two variable index digits".into()))?;
            let [i, j] = digits[..] else {
                return Err(err("a pair names exactly two variables".into()));
            };
            let k =
                pair_index(n, i, j).ok_or_else(|| err(format!("not a pair i<j within 1..={n}")))?;
            if coeffs >> k & 1 == 1 {
                return Err(err("duplicate pair".into()));
            }
            coeffs |= 1 << k;
        }
        Ok(Self::from_raw(n, coeffs))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let text: Vec<String> = self
            .pairs()
            .iter()
            .map(|(i, j)| format!("{i}{j}"))
            .collect();
        f.write_str(&text.join("+"))
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad(n={}, {})", self.n, self)
    }
}

/// Every form in Gray-code order of the coefficient mask: consecutive
/// items differ in exactly one coefficient.
pub fn enumerate_quadratics(n: usize) -> Result<impl Iterator<Item = QuadraticForm>> {
    check_vars(n)?;
    let total = 1u32 << pair_count(n);
    Ok((0..total).map(move |k| QuadraticForm::from_raw(n, gray(k))))
}

/// Human-readable coefficient layout, one line per bit.
pub fn explain_layout(n: usize) -> Result<String> {
    check_vars(n)?;
    let mut out = format!(
        "quadratic form layout for n={n}: {} coefficient bits, pair order lexicographic\n",
        pair_count(n)
    );
    out.push_str("bit  mask      pair  monomial\n");
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        out.push_str(&format!("{k:>3}  {:#08x}  {i}{j}    x{i}x{j}\n", 1u32 << k));
    }
    Ok(out)
}
