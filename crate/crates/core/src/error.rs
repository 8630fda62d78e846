use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid index set {0:?}")]
    BadIndexSet(Vec<usize>),
    #[error("order {n} exceeds the configured size cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("group inverse does not exist")]
    NoGroupInverse,
    #[error("q must be nonnegative")]
    QNotNonnegative,
    #[error("matrix must be 2x2, got {rows}x{cols}")]
    Not2x2 { rows: usize, cols: usize },
    #[error("cone is {{0}}")]
    EmptyCone,
    #[error("cone contains a line; generators must span a pointed cone")]
    NotPointed,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {}", .0.join("; "))]
    PreconditionFailed(Vec<String>),
    #[error("matrix is not an invertible M-matrix")]
    NotInvertibleM,
    #[error("bordering vector must be nonzero and nonpositive")]
    BadU,
    #[error("v^T u must equal 1")]
    BadInnerProduct,
    #[error("eps*I + A is singular")]
    SingularShift,
    #[error("matrix is not row stochastic")]
    NotRowStochastic,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not irreducible")]
    NotIrreducible,
}
