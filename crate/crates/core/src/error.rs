use alloc::string::String;

/// Errors raised by ring, ideal and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("generator list is empty or all zero")]
    ZeroIdeal,
    #[error("element or ideal is not integral: {0}")]
    NotIntegral(String),
    #[error("containment fails: {0}")]
    NotContained(String),
    #[error("quotient has infinite index")]
    InfiniteIndex,
    #[error("ring is not a Dedekind domain: {0}")]
    NotDedekind(String),
    #[error("duplicate prime in prescription: {0}")]
    DuplicatePrime(String),
    #[error("enumeration bound {given} is below the required bound {required}")]
    BoundTooSmall { required: u64, given: u64 },
    #[error("level {0} is not dominated by the source level")]
    LevelNotDominated(String),
    #[error("prime window error: {0}")]
    Window(String),
    #[error("group enumeration contains the identity element")]
    IdentityElement,
    #[error("witness is not certified: {0}")]
    Uncertified(String),
    #[error("ring is a field")]
    IsField,
    #[error("Jacobson radical is not known to vanish")]
    RadicalNonzero,
    #[error("search exhausted: {what} (bound {bound})")]
    SearchExhausted { what: String, bound: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
