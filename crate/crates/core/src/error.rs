use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeilError {
    #[error("matrix {0:?} does not have determinant 1")]
    NotUnimodular([i64; 4]),
    #[error("matrix {0:?} is not in Gamma_0({1}) with d > 0")]
    NotInGamma0([i64; 4], u64),
    #[error("square root requested for non-positive integer {0}")]
    NonPositiveSqrt(i64),
    #[error("incomplete gamma needs y > 0, got {0}")]
    NonPositiveArgument(f64),
    #[error("point {0} is not in the upper half plane")]
    NotInUpperHalfPlane(String),
    #[error("truncation bound {bound:e} exceeds requested accuracy {accuracy:e}")]
    TruncationTooLarge { bound: f64, accuracy: f64 },
    #[error("expansion is not in the plus space: coefficient at n = {0}")]
    NotPlusSpace(String),
    #[error("weight mismatch: expansion has weight {found}/2, expected {expected}/2")]
    WeightMismatch { found: i64, expected: i64 },
    #[error("support violation: {0}")]
    Support(String),
    #[error("index m = {0} is neither 1 nor prime")]
    IndexNotPrime(u64),
    #[error("weight k = {0} must be even")]
    OddWeight(i64),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, WeilError>;
