use thiserror::Error;

use crate::chamber::LrPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix rows are rank deficient")]
    RankDeficient,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("chamber complex data is corrupt: {0}")]
    DataCorrupt(String),

    #[error("chamber formulas disagree at {point}: {first} gives {first_value}, {second} gives {second_value}")]
    InconsistentFormulas {
        point: LrPoint,
        first: String,
        first_value: i64,
        second: String,
        second_value: i64,
    },

    #[error("validation failed at {input}: expected {expected}, found {found}")]
    ValidationFailure {
        input: String,
        expected: i64,
        found: i64,
    },

    #[error("ray permutation does not lift to a linear map: {0}")]
    NoLift(String),

    #[error("map is not unimodular over the integers: {0}")]
    NotUnimodular(String),

    #[error("map does not permute the chambers: image of {chamber} is not a chamber")]
    NotChamberMap { chamber: String },

    #[error("polynomial identity fails for chamber {chamber}")]
    PolynomialMismatch { chamber: String },

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
