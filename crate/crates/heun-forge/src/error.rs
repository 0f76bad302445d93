//! Front-end errors and their exit statuses.

use heun_core::{ErrorClass, HeunError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Inputs parse but contradict each other or the chosen engine.
    #[error("inconsistent configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] HeunError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Config(_) => 3,
            CliError::Core(e) => match e.class() {
                ErrorClass::Resonance => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Internal => 4,
            },
            CliError::Io(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "usage",
            2 => "resonance",
            3 => "precondition",
            _ => "internal",
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
