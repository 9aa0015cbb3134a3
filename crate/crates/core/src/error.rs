use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("zero has no {0}")]
    Zero(&'static str),
    #[error("expected a p-adic unit, got valuation {0}")]
    NotUnit(i64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("operation refused: {0}")]
    Refused(String),
    #[error("mixed-prime arithmetic ({0} vs {1})")]
    PrimeMismatch(u64, u64),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
