use thiserror::Error;

/// Witness that two bases fail the exchange axiom: removing `e` from `b1`
/// cannot be repaired by any element of `b2 \ b1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub b1: u64,
    pub b2: u64,
    pub e: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MvError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("interpolation nodes are not distinct")]
    DuplicateNodes,
    #[error("not a matroid: exchange fails for bases {:#b} and {:#b} at element {}", .0.b1, .0.b2, .0.e)]
    NotAMatroid(ExchangeViolation),
    #[error("subset {0:#b} is not stressed")]
    NotStressed(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("unresolvable: {0}")]
    Unresolvable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, MvError>;
