use thiserror::Error;

/// Everything that can go wrong in the math core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: i64 },

    #[error("invalid arguments: {0}")]
    InvalidArgs(String),

    #[error("continued fraction needs at least one entry")]
    EmptyList,

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("parameters are not pairwise coprime: {0}")]
    NotCoprime(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("grading shift is not an even integer: {0}")]
    NonIntegralShift(String),

    #[error("malformed extrema sequence: {0}")]
    MalformedSequence(String),

    #[error("closed form undefined at this parameter: {0}")]
    DomainEdge(String),

    #[error("unsupported triple: {0}")]
    UnsupportedTriple(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(i64),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
