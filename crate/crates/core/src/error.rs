//! Crate-wide error type.

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("series is zero to its precision")]
    ZeroSeries,
    #[error("insufficient precision: need {needed}, have {available}")]
    InsufficientPrecision { needed: i64, available: i64 },
    #[error("finite continued fraction reaches precision {achievable}, requested {requested}")]
    CfTooShort { achievable: i64, requested: i64 },
    #[error("continued fraction has no quotient at index {0}")]
    QuotientOutOfRange(usize),
    #[error("partial quotient must have degree >= 1")]
    QuotientDegree,
    #[error("golden partial quotient requires a unit leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("matrix size {size} too small: requires > {bound}")]
    MatrixTooSmall { size: usize, bound: usize },
    #[error("operation requires a prime field, got {0}")]
    PrimeFieldRequired(FieldSpec),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
