use thiserror::Error;

/// Errors raised by patch construction, evaluation and file handling.
///
/// Side indices stored in variants are 0-based; `Display` renders them
/// 1-based, which is how they appear on the command line. Messages leave
/// out the class name; see [`Error::class`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least 3 sides, got {0}")]
    Arity(usize),

    #[error(
        "loop not closed between sides {} and {}: gap {gap:e} exceeds tolerance {tolerance:e}",
        side + 1,
        next + 1
    )]
    Closure {
        side: usize,
        next: usize,
        gap: f64,
        tolerance: f64,
    },

    #[error("{0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid loop document: {0}")]
    Schema(String),

    #[error("solver did not converge after {iterations} iterations (residual {residual:e})")]
    Numeric { iterations: usize, residual: f64 },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Short name of the error class, stable across releases.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Arity(_) | Error::Schema(_) => "schema",
            Error::Closure { .. } => "closure",
            Error::Domain(_) | Error::Precondition(_) => "domain",
            Error::Parse { .. } => "parse",
            Error::Numeric { .. } => "numeric",
            Error::Usage(_) => "usage",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
