use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} outside supported range 1..={1}")]
    UnsupportedDimension(usize, usize),
    #[error("infinitesimal not evaluable")]
    InfinitesimalNotEvaluable,
    #[error("angle t{0} not supplied")]
    MissingAngle(usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("result is not a vector: {0}")]
    NotAVector(String),
    #[error("overlapping bivector index pairs")]
    OverlappingPairs,
    #[error("invalid spin element: {0}")]
    InvalidSpin(String),
    #[error("wrong vector family for action {0}")]
    WrongFamily(String),
    #[error("T generator reached the delta distribution")]
    TOnDelta,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("not an eigenvector of the torus action")]
    NotEigenvector,
    #[error("non-diagonalizable residue in degree {0}")]
    NotDiagonalizable(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
