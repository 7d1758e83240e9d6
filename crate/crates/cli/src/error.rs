use bisep_core::Error;
use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 1 for failed mathematical preconditions or checks, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NoSeparator { .. } | Error::NotAcm(_)) => EXIT_FAILURE,
            _ => EXIT_INPUT,
        }
    }
}
