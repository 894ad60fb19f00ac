use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("no image provided for symbol `{0}`")]
    MissingImage(String),
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("symbol `{0}` is not declared in this ring")]
    UnknownSymbol(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("point has {got} coordinates but the ring has {want} variables")]
    PointLength { want: usize, got: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("branch depth {0} exceeded while building the Groebner system")]
    BranchDepth(usize),
    #[error("expected a difference of monomials, found `{0}`")]
    NonBinomial(String),
    #[error("point lies outside the segment condition")]
    PointOutsideSegment,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
