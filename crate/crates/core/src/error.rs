use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("route `{route}` does not apply to k = {k}: {reason}")]
    RouteMismatch {
        route: &'static str,
        k: u64,
        reason: &'static str,
    },

    #[error("independent computations disagree: {0}")]
    Inconsistent(String),

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("value {v} not attained for any k <= {ceiling}")]
    NotFoundBelowCeiling { v: i64, ceiling: u64 },

    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
