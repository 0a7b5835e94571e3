use thiserror::Error;

/// Errors produced by the planners, bound computations and instance I/O.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CspError {
    /// Two points that must be at least `2ρ` apart are closer than that.
    #[error("points {first} and {second} are {distance} apart, below the required separation {required}")]
    SeparationViolation {
        first: usize,
        second: usize,
        distance: f64,
        required: f64,
    },

    /// Consecutive paths handed to [`crate::concatenate`] do not meet.
    #[error("path {index} does not start where path {} ends (position gap {position_gap}, heading gap {heading_gap})", .index - 1)]
    Discontinuity {
        index: usize,
        position_gap: f64,
        heading_gap: f64,
    },

    /// A side-constrained one-sided path does not exist at this heading.
    #[error("no {side} turn path exists at heading {theta}")]
    InfeasibleHeading { side: char, theta: f64 },

    #[error("instance generation stalled after {rejections} consecutive rejections")]
    GenerationStalled { rejections: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid instance: {0}")]
    Validation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = CspError> = std::result::Result<T, E>;
