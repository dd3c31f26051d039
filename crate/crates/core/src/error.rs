use thiserror::Error;

/// Errors raised by the algebra, the torus engine and the knot layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed coefficient rings: {0} and {1}")]
    MixedRing(String, String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("leading coefficient {0} is not invertible")]
    NonInvertibleLead(String),
    #[error("z = 0 meets a negative power of z")]
    ZSingular,
    #[error("z = {0} is not invertible in the coefficient ring")]
    NotInvertible(i64),
    #[error("polynomial has negative powers of z")]
    NegativeZPower,
    #[error("evaluation point is divisible by the modulus {0}")]
    ZeroEvaluation(u64),
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
    #[error("no stored polynomial for `{name}` at p = {prime}, z = {eval}")]
    UnsupportedEvaluation { name: String, prime: u64, eval: i64 },
    #[error("named factor `{0}` has no braid word")]
    NamedFactorPresent(String),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("move class exceeded {0} words")]
    ClassSizeExceeded(usize),
    #[error("no skein resolution applies to {0}")]
    IrreducibleWord(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("exponents not strictly ascending at `{0}`")]
    NonAscendingExponents(String),
    #[error("row {row}: {reason}")]
    InvariantViolation { row: usize, reason: String },
    #[error("unrealized candidate {0}")]
    UnrealizedCandidate(String),
    #[error("invalid degree window: {0}")]
    InvalidWindow(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
