use std::io;

use thiserror::Error;

/// Everything that ends a run early, with its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Invalid(String),

    #[error("{0}")]
    Capacity(String),

    #[error("{context}: {source}")]
    Io { context: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Capacity(_) => 3,
        }
    }

    pub fn io(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

impl From<posetforge_core::Error> for CliError {
    fn from(e: posetforge_core::Error) -> Self {
        match e {
            posetforge_core::Error::Capacity(_) | posetforge_core::Error::Overflow => {
                CliError::Capacity(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
