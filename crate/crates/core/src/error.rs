use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shapes do not compose: {left:?} * {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not invertible over the integers (det = {det})")]
    NotUnimodular { det: BigInt },

    #[error("order not certified within search bound {bound}")]
    OrderExceedsBound { bound: u64 },

    #[error("form of rank {rank} is degenerate mod 2; Arf invariant undefined")]
    ArfDegenerate { rank: usize },

    #[error("brute-force Arf scan is capped at rank {max}, got {rank}")]
    ArfTooLarge { rank: usize, max: usize },

    #[error("vector dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by arguments outside an operation's domain.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::OrderExceedsBound { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
