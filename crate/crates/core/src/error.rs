use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimension or label mismatch between operands.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("bracket [e{index}, e{index}] must vanish")]
    Antisymmetry { index: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    Associativity { i: usize, j: usize, k: usize },

    #[error("unit law fails on basis element {index}")]
    Unit { index: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A structural identity that must hold by construction was violated.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
