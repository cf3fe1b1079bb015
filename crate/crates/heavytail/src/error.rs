use thiserror::Error;

/// Errors reported by the model, estimator and diagnostic routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter failed its validity constraint at construction time.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested scaling sequence is outside the large-deviation region.
    #[error("outside the large-deviation region: {0}")]
    Regime(String),

    /// A diagnostic could not be computed from the given data.
    #[error("diagnostic error: {0}")]
    Diagnostic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
