use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported cyclotomic order {0} (primes and 4 only)")]
    UnsupportedOrder(u64),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
    #[error("exponent {0} is not coprime to {1}")]
    NotCoprime(i64, u64),
    #[error("half powers at order {0} have no canonical sign; supply explicit signs instead")]
    SignUndetermined(u64),
    #[error("non-integral multiplicity k_{j} = {value}; the character data is not that of a virtual representation")]
    Integrality { j: usize, value: String },
    #[error("invalid spec at {path}: {msg}")]
    InvalidSpec { path: String, msg: String },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
