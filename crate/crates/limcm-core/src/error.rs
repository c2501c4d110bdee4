use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{name}` at {line}:{col}")]
    UnknownVariable { name: String, line: usize, col: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),
    #[error("not a system of parameters: {0}")]
    NotSop(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
