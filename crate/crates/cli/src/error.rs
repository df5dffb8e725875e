use std::process::ExitCode;

use thiserror::Error;

/// CLI failure classes, mapped onto the exit-code contract:
/// 2 for argument/configuration problems, 3 for numerical failures.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Io(_) => ExitCode::from(2),
            CliError::Numerical(_) => ExitCode::from(3),
        }
    }
}

impl From<decay_spectra::Error> for CliError {
    fn from(err: decay_spectra::Error) -> Self {
        if err.is_numerical() {
            CliError::Numerical(err.to_string())
        } else {
            CliError::Usage(err.to_string())
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
