use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular at working tolerance")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("x lies on the affine span of the columns of q (Sherman-Morrison denominator vanishes)")]
    AffineSpanDegenerate,
    #[error("pin position lies on the affine span of the point block")]
    OnAffineSpan,
    #[error("pin direction is parallel to the affine span of the point block")]
    ParallelToAffineSpan,
    #[error("motion spaces belong to different configurations")]
    ConfigMismatch,
    #[error("index {index} out of range (count {count})")]
    BadIndex { index: usize, count: usize },
    #[error("bad Henneberg support: {0}")]
    BadSupport(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bad polynomial degree: {0}")]
    BadDegree(String),
    #[error("graph is not generically isostatic")]
    NotIsostatic,
    #[error("motion is trivial (lies in the isometry space)")]
    TrivialMotion,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
