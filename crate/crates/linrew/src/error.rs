//! Error type for parsing, validation and dispatch.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("validation: {0}")]
    Validation(String),
    #[error("{verb} is not applicable to this system kind")]
    IncompatibleVerb { verb: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { line, col, msg: msg.into() }
    }

    pub fn validation(msg: impl ToString) -> Self {
        CliError::Validation(msg.to_string())
    }
}
