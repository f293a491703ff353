use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: denominator {den} vanishes at {point}")]
    Pole { den: String, point: String },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("cell ({col},{row}) is not in partition {partition}")]
    CellNotInPartition {
        col: usize,
        row: usize,
        partition: String,
    },

    #[error("cell ({col},{row}) is not addable to partition {partition}")]
    NotAddable {
        col: usize,
        row: usize,
        partition: String,
    },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid Dyck word: {0}")]
    InvalidDyck(String),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("degree {degree} exceeds supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("label {label} lies in the bottom row; statistic undefined")]
    BottomRow { label: usize },

    #[error("nonzero remainder in division by (y_{next} - y_{index})")]
    NonzeroRemainder { index: usize, next: usize },

    #[error("operator relation failed: {0}")]
    RelationFailed(String),

    #[error("operator index {index} out of range for {vars} variables")]
    OperatorIndex { index: usize, vars: usize },

    #[error("coefficient of {partition} is not a polynomial: {value}")]
    NotPolynomial { partition: String, value: String },

    #[error("too few variables: {vars} < {needed}")]
    TooFewVariables { vars: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
