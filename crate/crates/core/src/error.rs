use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("coefficient domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} does not fit the machine-word field representation")]
    PrimeTooLarge(u64),
    #[error("{0} is a perfect square; Q(sqrt {0}) is not a field extension")]
    SquareRadicand(i64),
    #[error("coefficient {0} has no image in {1}")]
    NoImage(String, String),
    #[error("too many variables: {0} (at most {1} supported)")]
    TooManyVariables(usize, usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComputeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("generators live in different free modules")]
    ModuleMismatch,
    #[error("polynomial is not reduced (singular locus has codimension 1)")]
    NotReduced,
    #[error("Hilbert function does not stabilize: {0}")]
    NotStabilized(String),
    #[error("singular subscheme has dimension {0}; only dimensions 0 and 1 are supported")]
    UnsupportedDimension(i64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("primes disagree: {0}")]
    PrimeDisagreement(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Compute(#[from] ComputeError),
    #[error("hyperplane {0} is the zero form")]
    ZeroForm(usize),
    #[error("hyperplanes {0} and {1} are proportional")]
    Proportional(usize, usize),
    #[error("form {index} has {found} coefficients, expected {expected}")]
    WrongLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("degenerate specialization at t = {t}: {reason}")]
    Degenerate { t: String, reason: String },
    #[error("forbidden parameter t = {0}")]
    Forbidden(String),
    #[error("ambient dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("file {path}: {message}")]
    File { path: String, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("T_n needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(usize, usize),
    #[error("expected {expected} points, got {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}
