use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid dimension {0}: {1}")]
    InvalidDimension(usize, &'static str),
    #[error("axis {axis} out of range for dimension {dim}")]
    InvalidAxis { axis: usize, dim: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("set is not contained in the box")]
    NotContained,
    #[error("box must be axis-aligned with unit steps")]
    NotABox,
    #[error("shift vector must be nonzero with entries in {{0,1}}")]
    InvalidShift,
    #[error("degenerate simplex")]
    DegenerateSimplex,
    #[error("domain is not a simplex")]
    NotSimplex,
    #[error("domain is not a convex progression ({gap} missing points)")]
    NotConvexProgression { gap: usize },
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("lower-dimensional hull (affine dimension {0})")]
    LowerDimensional(usize),
    #[error("family size cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
