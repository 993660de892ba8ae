use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: u64,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("input: {0}")]
    Input(tda_core::Error),

    #[error("computation: {0}")]
    Compute(String),
}

impl CliError {
    /// Process exit status: 2 usage, 3 input or parse, 4 computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Input(_) => 3,
            CliError::Compute(_) => 4,
        }
    }
}

impl From<tda_core::Error> for CliError {
    fn from(e: tda_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e)
        } else {
            CliError::Compute(e.to_string())
        }
    }
}
