use thiserror::Error;

use crate::mm::ReadError;

/// Exit status 0: the run succeeded and every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit status 1: bad input or configuration.
pub const EXIT_INPUT: i32 = 1;
/// Exit status 2: numerical non-convergence or a failed verification.
pub const EXIT_NUMERICAL: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("{0}")]
    Core(#[from] liesplit_core::Error),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(liesplit_core::Error::NoConvergence { .. }) => EXIT_NUMERICAL,
            _ => EXIT_INPUT,
        }
    }
}
