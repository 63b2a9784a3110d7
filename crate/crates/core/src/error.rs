use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {what} would need {needed} entries (limit {limit})")]
    ResourceLimit {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    #[error("inconsistent results between computation paths: {0}")]
    Inconsistent(String),

    #[error("no sign change bracketing a root on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("iteration budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("polynomials live in different phase spaces ({0} vs {1} degrees of freedom)")]
    DimensionMismatch(usize, usize),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("trapping argument violated at step {step}: {reason}")]
    TrappingViolation { step: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
