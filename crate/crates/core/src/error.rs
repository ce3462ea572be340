use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("not a direct sum: join has dimension {found}, expected {expected}")]
    NotDirectSum { expected: isize, found: isize },
    #[error("projection center fills the ambient space")]
    NoProjection,
    #[error("points not in general position: {0}")]
    GeneralPosition(String),
    #[error("genericity failure: {0}")]
    Genericity(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parametrization is not {order}-regular at the given point")]
    Regularity { order: usize },
    #[error("retries exhausted after {attempts} attempts; last failure: {last}")]
    RetriesExhausted { attempts: usize, last: String },
    #[error("spec parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Failures caused by an unlucky random choice rather than bad input.
    pub fn is_genericity(&self) -> bool {
        matches!(
            self,
            Error::Genericity(_)
                | Error::GeneralPosition(_)
                | Error::NotDirectSum { .. }
                | Error::DegenerateCurve(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
