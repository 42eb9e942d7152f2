use thiserror::Error;

use crate::algebra::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("functional does not vanish on the commutator space")]
    NotSymmetricForm,
    #[error("no symmetrising form found after {trials} trials (search space exhausted: {exhausted})")]
    FormNotFound { trials: usize, exhausted: bool },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not central")]
    NotCentral,
    #[error("enumeration of {size} elements exceeds budget {budget}")]
    TooLarge { size: u128, budget: u128 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("bad Brauer tree: {0}")]
    BadTree(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(ValidationReport),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
