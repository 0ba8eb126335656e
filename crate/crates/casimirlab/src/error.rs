use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("N = {given} too small, need N >= {min}")]
    InsufficientN { given: i64, min: i64 },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("vanishing denominator: {0}")]
    VanishingDenominator(String),
    #[error("degenerate eigenvalues: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("need at least {required} sample points, got {given}")]
    InsufficientSamples { required: usize, given: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("spectrum: {0}")]
    Spectrum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
