//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the tracker library.
#[derive(Debug, Error)]
pub enum Error {
    /// A bounding box with non-positive or non-finite width/height was rejected.
    #[error("invalid bounding box: width={width}, height={height}")]
    InvalidBox { width: f64, height: f64 },

    /// A birth was requested with a confidence that would not survive pruning.
    #[error("rejected birth: confidence {confidence} is not above prune threshold {threshold}")]
    RejectedBirth { confidence: f64, threshold: f64 },

    /// An innovation covariance was not positive-definite.
    #[error("degenerate covariance: innovation covariance is not positive-definite")]
    CovarianceDegenerate,

    /// The infeasible sentinel passed to the assignment solver was not strictly
    /// greater than every feasible matrix entry.
    #[error("assignment contract violation: {0}")]
    SentinelContract(String),

    /// Frames must be presented to the tracker in strictly increasing order.
    #[error("non-monotonic frame index: got {got} after {last}")]
    NonMonotonicFrame { last: u32, got: u32 },

    /// A text input could not be parsed. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Ground truth was empty, so MOTA is undefined.
    #[error("empty ground truth: MOTA is undefined (division by zero)")]
    EmptyGroundTruth,

    /// A scenario specification failed validation.
    #[error("invalid scenario spec: {0}")]
    InvalidSpec(String),

    /// A tracker configuration failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
