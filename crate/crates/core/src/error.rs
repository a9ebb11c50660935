use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero element")]
    ZeroInput,
    #[error("operation is undefined on a constant")]
    ConstantInput,
    #[error("direction (0,0) is not allowed")]
    ZeroDirection,
    #[error("element is not homogeneous for direction ({rho},{sigma})")]
    NotHomogeneous { rho: i64, sigma: i64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("[z,w] != 1")]
    NotAWeylPair,
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn violation(msg: impl Into<String>) -> Error {
    Error::InvariantViolation(msg.into())
}
