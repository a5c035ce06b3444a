use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    OutsideBox {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("alphabet size mismatch: {0}")]
    SizeMismatch(String),

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid slice word: {0}")]
    Invalid(String),

    #[error("slice word is not closed")]
    NotClosed,

    #[error("crossings are not allowed here")]
    HasCrossings,

    #[error("split/merge vertices are not allowed here")]
    HasVertices,

    #[error("overlapping state labels")]
    OverlappingLabels,

    #[error("matrix factorization has nonzero potential")]
    NonzeroPotential,

    #[error("result is not integral: {0}")]
    NonIntegral(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
