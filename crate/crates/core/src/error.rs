use thiserror::Error;

use crate::exactring::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A variable is truncated (SERIES) in one operand and exact (POLY) in the other.
    #[error("variable `{0}` is classed both as a series variable and as a polynomial variable")]
    ClassingConflict(Var),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("series outside the domain of {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("variable `{0}` is required but was not supplied")]
    MissingVariable(String),

    #[error("weight {weight} exceeds the brute-force bound {bound}")]
    OracleScale { weight: usize, bound: usize },

    #[error("invalid partition `{0}`: parts must be positive and weakly decreasing")]
    InvalidPartition(String),

    #[error("binomial-type coefficient {0} must be a polynomial of degree at most 1 in the binomial symbol")]
    BinomialDegree(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
