use thiserror::Error;

/// Errors reported by the sampling, analytic, and experiment layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violated its domain (non-positive stiffness, filling
    /// outside 0..=n, too few bins, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A matrix or curve contained NaN or infinite entries where finite
    /// values are required.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// Two density curves were combined but live on different grids.
    #[error("density curves are defined on different grids")]
    GridMismatch,

    /// A histogram was asked to carry nonzero mass with no in-range samples.
    #[error("cannot normalize an empty sample set to nonzero mass")]
    EmptyHistogram,
}

pub type Result<T> = std::result::Result<T, Error>;
