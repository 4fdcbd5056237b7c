use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}: argument has a nonzero constant term")]
    NonzeroConstant(&'static str),
    #[error("{0}: argument does not have constant term 1")]
    NonUnitConstant(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("truncation order must be at least 1")]
    BadOrder,
    #[error("exponential of a term without positive (h,g)-degree")]
    DivergentExp,
    #[error("exponential argument is not nilpotent in this representation")]
    NotNilpotent,
    #[error("unsupported spin {0}")]
    UnsupportedSpin(String),
    #[error("inconsistent relations: {0}")]
    Inconsistent(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("rewrite budget exhausted")]
    BudgetExhausted,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
