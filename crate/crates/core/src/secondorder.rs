//! Exhaustive scans over the cosets `f + q` of the homogeneous quadratic
//! forms `q`.
//!
//! Since `nl` already minimises over affine functions, minimising
//! `nl(f + q)` over the `2^(n(n-1)/2)` forms gives the exact distance from
//! `f` to RM(2, n). Forms are visited in Gray-code order so each step costs
//! one XOR of a monomial table plus one Walsh transform. The index space is
//! cut into a fixed number of contiguous Gray subranges, each with its own
//! running table, and the per-form results are written back by coefficient
//! mask, so outputs do not depend on the thread count.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadratic::{gray, monomial_tables, pair_count, table_of, QuadraticForm};
use crate::truth_table::{check_same, TruthTable};
use crate::walsh::nonlinearity_bits;

/// Subranges per scan; fixed so work splitting never depends on the pool.
const SCAN_CHUNKS: usize = 512;

/// Nonlinearity of every coset `f + q`, indexed by the coefficient mask of `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetProfile {
    base: TruthTable,
    nl: Vec<u8>,
}

impl std::fmt::Debug for CosetProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CosetProfile")
            .field("base", &self.base)
            .field("forms", &self.nl.len())
            .finish()
    }
}

impl CosetProfile {
    pub fn compute(f: &TruthTable) -> Self {
        let n = f.n();
        let total = 1usize << pair_count(n);
        let monomials = monomial_tables(n);
        let chunk = total.div_ceil(SCAN_CHUNKS).max(1);
        let mut by_gray = vec![0u8; total];
        by_gray
            .par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(c, out)| {
                let start = c * chunk;
                let mut table = f.bits() ^ table_of(n, gray(start as u32), &monomials);
                for (offset, slot) in out.iter_mut().enumerate() {
                    *slot = nonlinearity_bits(table, n) as u8;
                    let next = start + offset + 1;
                    if next < total {
                        table ^= monomials[next.trailing_zeros() as usize];
                    }
                }
            });
        let mut nl = vec![0u8; total];
        for (k, &v) in by_gray.iter().enumerate() {
            nl[gray(k as u32) as usize] = v;
        }
        Self { base: *f, nl }
    }

    pub fn base(&self) -> &TruthTable {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `nl(f + q)`.
    #[inline]
    pub fn get(&self, q: &QuadraticForm) -> u32 {
        self.nl[q.coeffs() as usize] as u32
    }

    /// Raw per-mask values.
    pub fn values(&self) -> &[u8] {
        &self.nl
    }

    pub fn min(&self) -> u32 {
        self.nl.iter().copied().min().unwrap_or(0) as u32
    }

    pub fn max(&self) -> u32 {
        self.nl.iter().copied().max().unwrap_or(0) as u32
    }

    pub fn spectrum(&self) -> NFhSpectrum {
        let n = self.n();
        let mut counts = vec![0u64; (1 << (n - 1)) + 1];
        for &v in &self.nl {
            counts[v as usize] += 1;
        }
        NFhSpectrum { n, counts }
    }

    /// Forms with `nl(f + q) = r`, in increasing mask order.
    pub fn members(&self, r: u32) -> Vec<QuadraticForm> {
        let n = self.n();
        self.nl
            .iter()
            .enumerate()
            .filter(|(_, &v)| v as u32 == r)
            .map(|(mask, _)| QuadraticForm::from_raw(n, mask as u32))
            .collect()
    }
}

/// Histogram `r ↦ #{q : nl(f + q) = r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NFhSpectrum {
    n: usize,
    counts: Vec<u64>,
}

impl NFhSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: u32) -> u64 {
        self.counts.get(r as usize).copied().unwrap_or(0)
    }

    /// Sum of counts at `r` and above.
    pub fn tail(&self, from: u32) -> u64 {
        self.counts.iter().skip(from as usize).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Non-zero entries in increasing `r`.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(r, &c)| (r as u32, c))
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Forms `g` with `nl(f + g) = r`, sorted by coefficient mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhSet {
    base: TruthTable,
    r: u32,
    members: Vec<QuadraticForm>,
}

impl FhSet {
    pub fn base(&self) -> &TruthTable {
        &self.base
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn members(&self) -> &[QuadraticForm] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn from_profile(profile: &CosetProfile, r: u32) -> Result<Self> {
        if profile.n() != 6 {
            return Err(Error::RequiresSixVars("Fh sets"));
        }
        Ok(Self {
            base: profile.base,
            r,
            members: profile.members(r),
        })
    }
}

/// Distance from `f` to RM(2, n), by a full Gray-code scan.
pub fn nl2(f: &TruthTable) -> u32 {
    CosetProfile::compute(f).min()
}

pub fn nfh_spectrum(f: &TruthTable) -> NFhSpectrum {
    CosetProfile::compute(f).spectrum()
}

pub fn fh_set(f: &TruthTable, r: u32) -> Result<FhSet> {
    if f.n() != 6 {
        return Err(Error::RequiresSixVars("Fh sets"));
    }
    FhSet::from_profile(&CosetProfile::compute(f), r)
}

/// Nonlinearity of every 6-variable quadratic form, by mask.
pub fn quadratic_nl_table() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let zero = TruthTable::from_raw(6, 0);
        CosetProfile::compute(&zero).nl
    })
}

/// Whether the 6-variable form `q` has nonlinearity 16.
#[inline]
pub fn in_s16(q: &QuadraticForm) -> bool {
    q.n() == 6 && quadratic_nl_table()[q.coeffs() as usize] == 16
}

#[inline]
fn in_s16_mask(mask: u32) -> bool {
    quadratic_nl_table()[mask as usize] == 16
}

/// Members of `s` that lie in S16.
pub fn s16_count(s: &FhSet) -> usize {
    s.members.iter().filter(|q| in_s16(q)).count()
}

/// `|(g + s) ∩ S16|`.
pub fn shifted_s16_count(g: &QuadraticForm, s: &FhSet) -> usize {
    shifted_s16_members(g, s.members()).len()
}

/// `{g + k : k ∈ set} ∩ S16`, sorted by mask.
pub fn shifted_s16_members(g: &QuadraticForm, set: &[QuadraticForm]) -> Vec<QuadraticForm> {
    let mut out: Vec<QuadraticForm> = set
        .iter()
        .map(|k| QuadraticForm::from_raw(6, g.coeffs() ^ k.coeffs()))
        .filter(in_s16)
        .collect();
    out.sort();
    out
}

pub fn s16_members(set: &[QuadraticForm]) -> Vec<QuadraticForm> {
    set.iter().copied().filter(in_s16).collect()
}

/// Per element `h`, the size of `(h + set) ∩ S16`.
pub fn pair_degrees(set: &[QuadraticForm]) -> Vec<usize> {
    set.iter()
        .map(|h| {
            set.iter()
                .filter(|k| in_s16_mask(h.coeffs() ^ k.coeffs()))
                .count()
        })
        .collect()
}

/// `|{h ∈ set : |(h + set) ∩ S16| ≥ t}|`. The self-sum `h + h = 0` has
/// nonlinearity 0 and never counts.
pub fn pair_profile(set: &[QuadraticForm], t: usize) -> usize {
    pair_degrees(set).into_iter().filter(|&d| d >= t).count()
}

/// `pair_profile` of `(g + k_set) ∩ S16`. Pairwise sums are shift-free, so
/// this equals the profile over the unshifted `k` indexing those elements.
pub fn shifted_pair_profile(g: &QuadraticForm, k_set: &[QuadraticForm], t: usize) -> usize {
    pair_profile(&shifted_s16_members(g, k_set), t)
}

/// `min_q [nl(f1 + q) + nl(f2 + q)]`, an upper bound on `nl2(f1 || f2)`.
pub fn concat_nl2_upper_bound(f1: &TruthTable, f2: &TruthTable) -> Result<u32> {
    check_same(f1.n(), f2.n())?;
    let a = CosetProfile::compute(f1);
    let b = CosetProfile::compute(f2);
    Ok(sum_min(&a, &b))
}

pub(crate) fn sum_min(a: &CosetProfile, b: &CosetProfile) -> u32 {
    a.nl.par_iter()
        .zip(b.nl.par_iter())
        .map(|(&x, &y)| x as u32 + y as u32)
        .min()
        .unwrap_or(0)
}

/// `nl2` through the two halves `f = f1 || f2`.
///
/// A form on `n` variables is `q'(x') + x_n·λ(x')` with `λ` linear, and `λ`
/// together with the affine part decouples the halves, so the bound above is
/// attained: `nl2(f1 || f2) = min_q' [nl(f1 + q') + nl(f2 + q')]`. The scan
/// covers `2 · 2^((n-1)(n-2)/2)` cosets instead of `2^(n(n-1)/2)`.
pub fn nl2_by_halves(f: &TruthTable) -> Result<u32> {
    let (low, high) = f.split()?;
    concat_nl2_upper_bound(&low, &high)
}

/// Whether `nl(f1 + q) + nl(f2 + q) >= threshold` for every form `q`, i.e.
/// `Fh_{f1}(k) ⊆ ∪_{m ≥ threshold-k} Fh_{f2}(m)` for every `k`.
pub fn fh_cover_holds(f1: &TruthTable, f2: &TruthTable, threshold: u32) -> Result<bool> {
    Ok(concat_nl2_upper_bound(f1, f2)? >= threshold)
}
