use thiserror::Error;

/// Errors raised by the geometry, coordinate and solver routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("great circles coincide or are antipodal")]
    CoincidentCircles,
    #[error("circles do not bound a proper spherical triangle: {0}")]
    NoTriangle(String),
    #[error("not a triangle: {0}")]
    NotATriangle(String),
    #[error("value {value} outside domain [{lo}, {hi}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },
    #[error("solver failure: {0}")]
    SolverFailure(String),
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
