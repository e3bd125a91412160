use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// lcm is only defined here over positive integers.
    #[error("lcm operand must be positive, got 0")]
    ZeroOperand,
    #[error("k = {k} exceeds n = {n}")]
    OutOfRange { n: u64, k: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("value must be positive, got 0")]
    ZeroValue,
    #[error("invalid range: from = {from} is greater than to = {to}")]
    InvalidRange { from: u64, to: u64 },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0} is not a product of primes up to {1}")]
    NotSmooth(String, u64),
    /// An identity that is a theorem failed to hold; this is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
