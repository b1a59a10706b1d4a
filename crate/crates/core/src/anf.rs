//! Algebraic normal form and the binary Möbius transform.
//!
//! A monomial is identified by the bitmask of its variables (bit `j` for
//! `x_{j+1}`), so the coefficient vector has the same shape as a truth table
//! and both directions of the transform are the same involution.
//!
//! Text format: terms joined by `+`, each term the concatenated 1-based
//! variable indices (`126+135+234`). `0` is the zero polynomial and `c` the
//! constant term.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::truth_table::{check_vars, domain_mask, TruthTable};
use crate::MAX_VARS;

/// Set of monomials with coefficient 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnfTermSet {
    n: u8,
    coeffs: u128,
}

/// In-place Möbius transform of a packed coefficient/table vector.
#[inline]
pub(crate) fn moebius(mut t: u128, n: usize) -> u128 {
    const LOW: [u128; 7] = [
        0x5555_5555_5555_5555_5555_5555_5555_5555,
        0x3333_3333_3333_3333_3333_3333_3333_3333,
        0x0F0F_0F0F_0F0F_0F0F_0F0F_0F0F_0F0F_0F0F,
        0x00FF_00FF_00FF_00FF_00FF_00FF_00FF_00FF,
        0x0000_FFFF_0000_FFFF_0000_FFFF_0000_FFFF,
        0x0000_0000_FFFF_FFFF_0000_0000_FFFF_FFFF,
        0x0000_0000_0000_0000_FFFF_FFFF_FFFF_FFFF,
    ];
    for (i, low) in LOW.iter().enumerate().take(n) {
        t ^= (t & low) << (1 << i);
    }
    t & domain_mask(n)
}

impl AnfTermSet {
    pub fn empty(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n: n as u8,
            coeffs: 0,
        })
    }

    /// Builds from monomials given as lists of 1-based variable indices.
    /// A repeated monomial cancels, as in GF(2) arithmetic.
    pub fn from_terms<T: AsRef<[usize]>>(n: usize, terms: &[T]) -> Result<Self> {
        let mut set = Self::empty(n)?;
        for term in terms {
            let mask = monomial_mask(n, term.as_ref())?;
            set.coeffs ^= 1u128 << mask;
        }
        Ok(set)
    }

    /// Builds from monomial masks (bit `j` selects `x_{j+1}`).
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::empty(n)?;
        for mask in masks {
            if mask >> n != 0 {
                return Err(Error::VariableIndex {
                    index: (usize::BITS - mask.leading_zeros()) as usize,
                    n,
                });
            }
            set.coeffs ^= 1u128 << mask;
        }
        Ok(set)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Packed coefficients, bit `m` for the monomial with variable mask `m`.
    #[inline]
    pub fn coeffs(&self) -> u128 {
        self.coeffs
    }

    pub fn contains_mask(&self, mask: usize) -> bool {
        mask < 1 << self.n && self.coeffs >> mask & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn len(&self) -> usize {
        self.coeffs.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs == 0
    }

    /// Monomial masks in increasing order.
    pub fn masks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..1usize << self.n).filter(move |&m| self.coeffs >> m & 1 == 1)
    }

    /// Monomials as sorted 1-based index lists.
    pub fn terms(&self) -> Vec<Vec<usize>> {
        self.masks().map(mask_to_indices).collect()
    }

    /// Largest monomial size; 0 for constants, including the zero function.
    pub fn degree(&self) -> usize {
        self.masks()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn to_truth_table(&self) -> TruthTable {
        TruthTable::from_raw(self.n(), moebius(self.coeffs, self.n()))
    }

    pub fn from_truth_table(f: &TruthTable) -> Self {
        Self {
            n: f.n() as u8,
            coeffs: moebius(f.bits(), f.n()),
        }
    }

    /// Sum over GF(2) (symmetric difference of the term sets).
    pub fn xor(&self, other: &Self) -> Result<Self> {
        crate::truth_table::check_same(self.n(), other.n())?;
        Ok(Self {
            n: self.n,
            coeffs: self.coeffs ^ other.coeffs,
        })
    }

    /// Parses the text format; `n` bounds the admissible indices.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_vars(n)?;
        let mut set = Self::empty(n)?;
        let mut seen = 0u128;
        let mut offset = 0;
        for raw in text.split('+') {
            let lead = raw.len() - raw.trim_start().len();
            let token = raw.trim();
            let position = offset + lead;
            offset += raw.len() + 1;
            let err = |reason: &str| Error::Parse {
                token: token.to_string(),
                position,
                reason: reason.to_string(),
            };
            let mask = match token {
                "" => return Err(err("empty term")),
                "0" => {
                    if text.trim() != "0" {
                        return Err(err("`0` must stand alone"));
                    }
                    return Ok(set);
                }
                "c" => 0,
                _ => {
                    let mut mask = 0usize;
                    for ch in token.chars() {
                        let index = ch
                            .to_digit(10)
                            .ok_or_else(|| err("expected a variable index digit"))?
                            as usize;
                        if index == 0 || index > n {
                            return Err(Error::Parse {
                                token: token.to_string(),
                                position,
                                reason: format!("variable index {index} out of range 1..={n}"),
                            });
                        }
                        if mask >> (index - 1) & 1 == 1 {
                            return Err(err("repeated variable in term"));
                        }
                        mask |= 1 << (index - 1);
                    }
                    mask
                }
            };
            if seen >> mask & 1 == 1 {
                return Err(err("duplicate term"));
            }
            seen |= 1u128 << mask;
            set.coeffs |= 1u128 << mask;
        }
        Ok(set)
    }

    /// Parses with `n` taken as the largest index when that index is 7;
    /// smaller functions could live in several spaces, so `None` is returned.
    pub fn infer_vars(text: &str) -> Option<usize> {
        let max = text
            .chars()
            .filter_map(|c| c.to_digit(10))
            .max()
            .unwrap_or(0) as usize;
        (max == MAX_VARS).then_some(MAX_VARS)
    }
}

fn monomial_mask(n: usize, indices: &[usize]) -> Result<usize> {
    let mut mask = 0usize;
    for &index in indices {
        if index == 0 || index > n {
            return Err(Error::VariableIndex { index, n });
        }
        mask |= 1 << (index - 1);
    }
    Ok(mask)
}

fn mask_to_indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|j| mask >> j & 1 == 1)
        .map(|j| j + 1)
        .collect()
}

fn term_text(mask: usize) -> String {
    if mask == 0 {
        "c".to_string()
    } else {
        mask_to_indices(mask)
            .into_iter()
            .map(|i| char::from(b'0' + i as u8))
            .collect()
    }
}

impl fmt::Display for AnfTermSet {
    /// Terms by decreasing degree, then lexicographically; constant last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut masks: Vec<usize> = self.masks().collect();
        masks.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), term_text(m)));
        let terms: Vec<String> = masks.into_iter().map(term_text).collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for AnfTermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Anf(n={}, {})", self.n, self)
    }
}

impl FromStr for AnfTermSet {
    type Err = Error;

    /// Parses in 7 variables; use [`AnfTermSet::parse`] to choose `n`.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(MAX_VARS, s)
    }
}

impl From<&TruthTable> for AnfTermSet {
    fn from(f: &TruthTable) -> Self {
        Self::from_truth_table(f)
    }
}

impl From<&AnfTermSet> for TruthTable {
    fn from(a: &AnfTermSet) -> Self {
        a.to_truth_table()
    }
}

/// `from_anf`: evaluates the polynomial on every point.
pub fn from_anf(terms: &AnfTermSet) -> TruthTable {
    terms.to_truth_table()
}

/// `to_anf`: recovers the unique polynomial.
pub fn to_anf(f: &TruthTable) -> AnfTermSet {
    AnfTermSet::from_truth_table(f)
}

pub fn degree(f: &TruthTable) -> usize {
    to_anf(f).degree()
}
