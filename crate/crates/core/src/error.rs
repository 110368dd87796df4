use alloc::string::String;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Operand shapes do not fit together.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A square matrix was required.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare {
        /// Row count.
        rows: usize,
        /// Column count.
        cols: usize,
    },
    /// The matrix has no inverse.
    #[error("matrix is singular")]
    Singular,
    /// A basis index outside `1..=dim`.
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange {
        /// Offending index.
        index: usize,
        /// Ambient dimension.
        dim: usize,
    },
    /// A bracket pair was specified twice.
    #[error("duplicate bracket entry ({0}, {1})")]
    DuplicateBracket(usize, usize),
    /// A rational literal that is not in lowest terms or is malformed.
    #[error("non-canonical rational literal {0:?}")]
    NonCanonicalRational(String),
    /// The requested quantity needs a larger algebra.
    #[error("dimension too small: {0}")]
    DimensionTooSmall(String),
    /// Parameters violate a family's side conditions.
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    /// Unknown family, parameter or option.
    #[error("unknown {0}")]
    Unknown(String),
    /// The requested computation is outside what is implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A subspace expected to be closed under the bracket is not.
    #[error("not closed: {0}")]
    NotClosed(String),
}
