use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("alpha must be at least 1")]
    ZeroAlpha,
    #[error("modulus {p}^{alpha} does not fit below 2^63")]
    ModulusTooLarge { p: u64, alpha: u32 },
    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: u64, modulus: u64 },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid denominator: {0}")]
    InvalidDenominator(String),
    #[error("element is not representable in base p/Q")]
    NotRepresentable,
    #[error("{what} budget exceeded: needs {needed}, budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polynomial is zero modulo p")]
    ZeroPolynomial,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
    #[error("malformed automaton file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
