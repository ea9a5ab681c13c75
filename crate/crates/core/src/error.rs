use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Fibonacci index {0} is below -1")]
    FibonacciIndex(i64),

    #[error("Catalan identity arguments out of range: m = {m}, i = {i}")]
    CatalanRange { m: i64, i: i64 },

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("series square root needs constant term 1")]
    NonUnitConstant,

    #[error("cannot divide by x: constant term is nonzero")]
    NonZeroConstant,

    #[error("requested {requested} coefficients from a series of order {order}")]
    OrderTooSmall { requested: usize, order: usize },

    #[error("continued fraction extraction broke down at depth {depth}")]
    ExtractionBreakdown { depth: usize },

    #[error("{system} weights cannot be applied to a {flavor} path")]
    WeightMismatch {
        flavor: &'static str,
        system: &'static str,
    },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid decoration at step {position}: {reason}")]
    InvalidDecoration { position: usize, reason: String },

    #[error("path is outside the domain at position {position}: {reason}")]
    OutsideDomain { position: usize, reason: String },

    #[error("{what} = {requested} exceeds the configured bound {bound}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
