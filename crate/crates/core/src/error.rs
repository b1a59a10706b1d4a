use thiserror::Error;

/// Errors raised while building or combining Boolean functions and forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} is outside the supported range {min}..={max}", min = crate::MIN_VARS, max = crate::MAX_VARS)]
    VariableCount(usize),

    #[error("operands have different variable counts ({left} vs {right})")]
    MismatchedVars { left: usize, right: usize },

    #[error("truth table has bits set beyond the 2^{n} points of the domain")]
    TableOverflow { n: usize },

    #[error("variable index {index} out of range 1..={n}")]
    VariableIndex { index: usize, n: usize },

    #[error("invalid token {token:?} at position {position}: {reason}")]
    Parse {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("hex truth table for n={n} needs {expected} digits, got {got}")]
    HexLength {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrix is singular over GF(2)")]
    SingularMatrix,

    #[error("{0} is only available for n=6")]
    RequiresSixVars(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
