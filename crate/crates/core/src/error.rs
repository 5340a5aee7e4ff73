use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic order {0}: orders must be non-negative")]
    InvalidOrder(i64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error(
        "ill-defined homomorphism: entry ({row}, {col}) = {entry} sends a summand of order \
         {source_order} to a summand of order {target_order}"
    )]
    IllDefinedHom {
        row: usize,
        col: usize,
        entry: String,
        source_order: u64,
        target_order: u64,
    },

    #[error("cannot compose: target {left} does not match source {right}")]
    CompositionMismatch { left: String, right: String },

    #[error("group {0} has an infinite cyclic summand")]
    NotFinite(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error(
        "unsupported range: pi_{i} of degree {n} lies beyond the first unstable degree {}",
        n.saturating_sub(1)
    )]
    UnsupportedRange { n: u64, i: u64 },

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("wrong parity: {0}")]
    WrongParity(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is neither symmetric nor antisymmetric")]
    NotInvolutionDatum,

    #[error("matrix is singular")]
    Singular,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
