use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {letter} needs more than {strands} strands")]
    StrandMismatch { letter: i64, strands: usize },
    #[error("empty word needs an explicit strand count")]
    EmptyAmbiguous,
    #[error("gcd({a}, {b}) = {gcd}, expected 1")]
    NotCoprime { a: i64, b: i64, gcd: i64 },
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("constant term of the denominator is not a unit")]
    NonUnitConstantTerm,
    #[error("no pole at s = 1")]
    NoPoleAtOne,
    #[error("pole at s = 1 is not simple")]
    PoleNotSimple,
    #[error("closure is not a knot: cycle type {cycles:?}")]
    NotAKnot { cycles: Vec<usize> },
    #[error("tensor dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("family invariant violated: {0}")]
    FamilyInvariantViolated(String),
    #[error("eigenvalue solver did not converge")]
    EigenSolverFailure,
    #[error("computation cancelled")]
    Cancelled,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
