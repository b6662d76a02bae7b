use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ideals live in different rings")]
    RingMismatch,

    #[error("no proper decomposition: {0} has no minimal primes")]
    NoProperDecomposition(&'static str),

    #[error("characteristic {0} is not supported (expected 0 or a prime below 65536)")]
    UnsupportedField(u32),

    #[error("the denominator ideal is not contained in the numerator ideal")]
    NotASubmodule,

    #[error("operation needs a squarefree ideal")]
    NotSquarefree,

    /// A computed quantity contradicted a theorem or an internal consistency
    /// check. Always a bug.
    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("declined: {0}")]
    Declined(String),
}
