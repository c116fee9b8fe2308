use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Cartan matrix is not of finite type (reflection closure exceeded bound)")]
    NotFiniteType,
    #[error("operation requires a GL(n) datum")]
    NotGl,
    #[error("invalid affine permutation window: {0}")]
    InvalidWindow(String),
    #[error("search box exhausted without finding a block label")]
    BoxExhausted,
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("{0}")]
    Invalid(String),
    #[error("target is not in the span of the basis at the stated truncation")]
    NotInSpan,
}
