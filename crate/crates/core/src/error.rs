use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(u32, u32),

    #[error("{what} out of range: {value} (allowed: {allowed})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        allowed: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph too large: {vertices} vertices exceeds guardrail of {limit}")]
    TooLarge { vertices: u128, limit: usize },

    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("graph is disconnected: vertex {unreached} unreachable from vertex {start}")]
    Disconnected { start: usize, unreached: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("structural audit failed: {0}")]
    Audit(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
