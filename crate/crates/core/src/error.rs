use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse `{0}` as a rational (expected `num/den` or an integer)")]
    Parse(String),
    #[error("cosine {0} lies outside [-1, 1]")]
    CosineOutOfRange(Rational),
    #[error("base {0} is below 2")]
    BaseTooSmall(u64),
    #[error("trajectory label needs at least one digit")]
    EmptyLabel,
    #[error("digit {digit} is not a base-{base} digit")]
    DigitOutOfRange { digit: u64, base: u64 },
    #[error(
        "labels are not comparable: base {left_base}/{right_base}, length {left_len}/{right_len}"
    )]
    LabelMismatch {
        left_base: u64,
        right_base: u64,
        left_len: usize,
        right_len: usize,
    },
    #[error("digit index {index} out of range for a label of {len} digits")]
    DigitIndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("discretisation parameter p must be positive")]
    ZeroP,
    #[error("state needs 0 <= n <= p and 0 <= m < p (got p={p}, n={n}, m={m})")]
    StateOutOfRange { p: u64, n: u64, m: u64 },
    #[error("grid resolution N={0} is below 2")]
    ResolutionTooSmall(u32),
    #[error("grid index out of range: N={resolution}, j={j}, k={k}")]
    IndexOutOfRange { resolution: u32, j: u32, k: u32 },
    #[error("grid resolutions differ ({0} vs {1})")]
    ResolutionMismatch(u32, u32),
    #[error("direction (theta={theta}, phi={phi}) is outside theta in [0, pi], phi in [0, 2pi)")]
    DirectionOutOfRange { theta: f64, phi: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("constraint targets undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("variable `{name}` has conflicting values in a union")]
    ConflictingValues { name: String },
    #[error(transparent)]
    Number(#[from] NumberError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnsembleError {
    #[error("unknown outcome symbol `{0}` (alphabet is a, b)")]
    UnknownSymbol(char),
    #[error("position {position} out of range for a string of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("ensemble strings differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ensemble string must be non-empty")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExperimentError {
    #[error("angle `{0}` must carry a value for a concrete analysis")]
    Unvalued(String),
    #[error("ensemble size {size} does not make the singlet counts for cosine {cosine} integral")]
    Integrality { cosine: Rational, size: u64 },
    #[error("ensemble size must be positive")]
    ZeroSize,
    #[error("setting pair ({x}, {y}) missing from the configuration")]
    MissingPair { x: u8, y: u8 },
    #[error("label belongs to pair ({label_x}, {label_y}), not to ensemble ({x}, {y})")]
    ForeignLabel {
        label_x: u8,
        label_y: u8,
        x: u8,
        y: u8,
    },
    #[error("label index {index} out of range for an ensemble of {size}")]
    LabelOutOfRange { index: u64, size: u64 },
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Admissibility(#[from] AdmissibilityError),
}

/// Any library failure. Every variant is a violated precondition on the
/// caller's input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Admissibility(#[from] AdmissibilityError),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
}
