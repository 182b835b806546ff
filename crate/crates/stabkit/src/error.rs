use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vector length must be even, got {0}")]
    OddVectorLength(usize),

    #[error("not a stabilizer group: {0}")]
    NotAStabilizerGroup(String),

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("input subspace is not isotropic")]
    NotIsotropic,

    #[error("refusing to enumerate Lagrangians at n={n}: roughly {estimate} subspaces (cap is n <= {cap})")]
    EnumerationTooLarge { n: usize, estimate: u64, cap: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("generator {which} is not CSS (pure X-type or pure Z-type with + sign): {word}")]
    NotCss { which: usize, word: String },

    #[error("qubit count {n} exceeds the cap {cap} for {what}")]
    CapExceeded { n: usize, cap: usize, what: String },

    #[error("stabilizer verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
