use thiserror::Error;

use crate::fano::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("unphysical state: {0}")]
    Unphysical(ValidationReport),

    #[error("Rindler parameter r = {0} lies outside [0, pi/4]")]
    RindlerOutOfRange(f64),

    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("table {table} cannot be evaluated: {reason}")]
    IncompatibleInput { table: String, reason: String },

    #[error("unknown table id `{0}`")]
    UnknownTable(String),

    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
