use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("subsystem index {index} out of range for {len} subsystems")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not Hermitian (max |M - M†| entry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, off by {deviation:e}")]
    TraceNotOne { trace: f64, deviation: f64 },

    #[error("not positive semidefinite (min eigenvalue {min_eigenvalue})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Jacobi iteration did not converge in {sweeps} sweeps")]
    NotConverged { sweeps: usize },

    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: String,
    },

    #[error("local dimension {k} exceeds the supported maximum of {max}")]
    SizeGuard { k: usize, max: usize },

    #[error("measurement is not a valid POVM (min effect eigenvalue {min_eigenvalue})")]
    InvalidMeasurement { min_eigenvalue: f64 },

    #[error("degenerate measurement: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason: reason.into(),
        }
    }

    /// True for errors caused by out-of-domain inputs rather than numerical failure.
    pub fn is_domain_error(&self) -> bool {
        !matches!(self, Error::NotConverged { .. })
    }
}
