use thiserror::Error;

/// Errors raised by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {entry} exceeds the number of variables n = {n}")]
    EntryExceedsN { entry: u32, n: usize },

    #[error("column of length {len} does not fit in [{n}]")]
    ColumnTooLong { len: usize, n: usize },

    #[error("empty sequence of sets")]
    EmptyChain,

    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },

    #[error("cell ({row}, {col}) is not an outer cell")]
    NotOuterCell { row: usize, col: usize },

    #[error("order parameter must be positive for a revKjdt move")]
    ZeroOrderParam,

    #[error("tableau does not fit in a {rows}x{cols} rectangle")]
    ExceedsRectangle { rows: usize, cols: usize },

    #[error("anti-rectification exceeded its iteration cap of {cap}")]
    IterationCap { cap: usize },

    #[error("no preimage under reverse insertion for m = {m}")]
    NoPreimage { m: u32 },

    #[error("{count} preimages under reverse insertion for m = {m}")]
    NonUniquePreimage { m: u32, count: usize },

    #[error("mismatched number of variables: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("composition has length {len}, expected {n}")]
    LengthMismatch { len: usize, n: usize },

    #[error("polynomial identity check failed: {0}")]
    IdentityMismatch(String),

    #[error("polynomial is not in the span of the Lascoux basis")]
    NotInSpan,

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("basis expansion has a negative or non-integral coefficient at {0}")]
    NegativeCoefficient(String),
}

impl Error {
    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            kind,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
