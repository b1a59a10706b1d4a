//! Boolean-function analytics for small `n` (at most 7 variables): algebraic
//! normal form, Walsh spectra, affine equivalence, and exhaustive scans over
//! quadratic cosets for second-order nonlinearity.
//!
//! The [`verify`] module builds on these to recompute, claim by claim, the
//! counts behind the covering radius 40 of RM(2,7), and to search for a
//! 7-variable function that attains it.

pub mod affine;
pub mod anf;
pub mod cli;
pub mod error;
pub mod quadratic;
pub mod secondorder;
pub mod truth_table;
pub mod verify;
pub mod walsh;

pub use affine::{apply_affine, random_affine, AffineMap};
pub use anf::{degree, from_anf, to_anf, AnfTermSet};
pub use error::{Error, Result};
pub use quadratic::{enumerate_quadratics, QuadraticForm};
pub use secondorder::{
    concat_nl2_upper_bound, fh_set, nfh_spectrum, nl2, pair_profile, s16_count,
    shifted_pair_profile, shifted_s16_count, CosetProfile, FhSet, NFhSpectrum,
};
pub use truth_table::TruthTable;
pub use walsh::{fwht, nonlinearity, WalshSpectrum};

pub const MIN_VARS: usize = 3;
pub const MAX_VARS: usize = 7;
