use thiserror::Error;

/// Every failure the library can report.
///
/// `PrecisionExhausted` is kept apart from the rest because callers treat it
/// as "retry with more digits" rather than as bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible over its base")]
    NotIrreducible,
    #[error("cannot decide irreducibility of {0}")]
    IrreducibilityUndecided(String),
    #[error("imperfection degree {0} is not supported (at most 2 variables)")]
    UnsupportedImperfection(usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("element has negative valuation")]
    NegativeValuation,
    #[error("Hensel hypothesis fails: {0}")]
    HenselHypothesisFailed(String),
    #[error("automorphism images are not closed under composition: {0}")]
    ActionNotClosed(String),
    #[error("action polynomial {0} is not a root of the minimal polynomial")]
    NotARoot(usize),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("no generator found for the fixed field of a subgroup of order {0}")]
    GeneratorSearchFailed(usize),
    #[error("extension is not in case III")]
    NotCaseIII,
    #[error("character is not faithful")]
    NotFaithful,
    #[error("character is not of degree one")]
    NotDegreeOne,
    #[error("extension is not well ramified: {0}")]
    NotWellRamified(String),
    #[error("conductor routes disagree: {0}")]
    ConductorMismatch(String),
    #[error("depth routes disagree: {0}")]
    DepthMismatch(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("no integral instance for p = {p}, e = {e}")]
    NonIntegralInstance { p: u64, e: u64 },
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("Hilbert and Herbrand verdicts disagree: {0}")]
    EquivalenceViolation(String),
    #[error("no case I / case II tower decomposition found")]
    NoDecomposition,
    #[error("internal assertion failed: {0}")]
    AssertionFailed(String),
    #[error("invalid input at {field}: {msg}")]
    Invalid { field: String, msg: String },
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("unknown catalog entry {0}")]
    UnknownName(String),
}

impl Error {
    pub fn invalid(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Invalid { field: field.into(), msg: msg.into() }
    }

    pub fn exhausted(msg: impl Into<String>) -> Self {
        Error::PrecisionExhausted(msg.into())
    }

    pub fn is_precision(&self) -> bool {
        matches!(self, Error::PrecisionExhausted(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
