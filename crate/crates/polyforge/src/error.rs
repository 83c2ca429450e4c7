use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not a prime below 2^62")]
    NotPrime(u64),
    #[error("constant {value} is not invertible in GF({p})")]
    NonInvertibleConstant { value: String, p: u64 },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("variable sets differ: {0}")]
    VariableMismatch(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("empty variable set")]
    NoVariables,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("resource cap exceeded: {what} budget of {limit} exhausted")]
    ResourceCap { what: &'static str, limit: u64 },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
