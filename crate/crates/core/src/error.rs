use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    /// `dividend` is `None` for the zero polynomial.
    #[error("dividend degree {dividend:?} is below divisor degree {divisor}")]
    DegreeTooSmall {
        dividend: Option<usize>,
        divisor: usize,
    },

    #[error("index {index} outside the valid range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix of order {order} exceeds the configured cap of {cap}")]
    MatrixTooLarge { order: usize, cap: usize },

    #[error("sequence length must be at least 1")]
    EmptySequence,

    #[error("determinant order must be at least 1")]
    InvalidOrder,

    #[error("interpolation nodes must be distinct")]
    DuplicateNode,
}
