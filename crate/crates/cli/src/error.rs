use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes. Every failure maps to exactly one of these.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Bad arguments, unreadable files, malformed input, other input errors.
    pub const INPUT: i32 = 1;
    pub const NOT_INTERVAL: i32 = 2;
    pub const DISCONNECTED: i32 = 3;
    pub const CHARACTERIZATION_GAP: i32 = 4;
    pub const TOO_LARGE: i32 = 5;
    /// `validate` ran to completion but some value comparison failed.
    pub const VALIDATION_FAILED: i32 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write `{path}`: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] nsn_core::Error),

    #[error("output failed: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use nsn_core::Error as E;
        match self {
            CliError::Core(E::NotInterval(_)) => exit::NOT_INTERVAL,
            CliError::Core(E::Disconnected) => exit::DISCONNECTED,
            CliError::Core(E::CharacterizationGap { .. }) => exit::CHARACTERIZATION_GAP,
            CliError::Core(E::TooLarge { .. }) => exit::TOO_LARGE,
            _ => exit::INPUT,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
