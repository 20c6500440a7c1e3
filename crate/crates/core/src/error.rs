use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("valuation of zero")]
    ValuationOfZero,
    #[error("pole at t=0")]
    PoleAtZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not unipotent at u=∞")]
    NotUnipotent,
    #[error("cap exceeded: need u-power {needed}, cap is {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("index tuples must be strictly increasing and of equal length")]
    BadMinorIndices,
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("non-regular parameter: {0}")]
    NonRegular(String),
    #[error("limit did not stabilize after {0} steps")]
    LimitDidNotStabilize(usize),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("arity mismatch: outer curve has {slots} marked slots, got {parts} parts")]
    ArityMismatch { slots: usize, parts: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
