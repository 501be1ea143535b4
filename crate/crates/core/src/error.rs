use thiserror::Error;

/// Errors raised by the field, polynomial, code and decoding layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different field contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("q = {0} is not prime")]
    NotPrime(u32),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    NotIrreducible(usize),
    #[error("field of order {q}^{m} does not fit the packed element representation")]
    FieldTooLarge { q: u32, m: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the zero polynomial has every field element as a root")]
    ZeroPolynomial,
    #[error("syndrome is zero; the received word is a codeword")]
    ZeroSyndrome,
    #[error("decoding failure: {0}")]
    DecodingFailure(String),
    #[error("enumeration needs {needed} combinations, budget is {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
