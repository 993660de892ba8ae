use thiserror::Error;

/// Errors raised by the geometry, complex, homology and mapper modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point cloud is empty")]
    EmptyCloud,

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {point} has a non-finite coordinate on axis {axis}")]
    NonFiniteCoordinate { point: usize, axis: usize },

    #[error("axis {axis} is out of range for {dimension}-dimensional points")]
    AxisOutOfRange { axis: usize, dimension: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unsupported dimension: {0}")]
    Unsupported(String),

    #[error("complex is not closed under faces: face {face:?} of simplex {simplex:?} is missing")]
    MissingFace {
        simplex: Vec<usize>,
        face: Vec<usize>,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True when the error stems from malformed input data rather than from
    /// parameters or the structure of an intermediate result.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyCloud
                | Error::DimensionMismatch { .. }
                | Error::NonFiniteCoordinate { .. }
                | Error::AxisOutOfRange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
