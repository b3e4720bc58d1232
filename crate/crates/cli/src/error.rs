use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot access `{}`: {source}", .path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Config(invnet_core::Error),

    #[error(transparent)]
    Solver(invnet_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(_) => 2,
            _ => 1,
        }
    }
}

impl From<invnet_core::Error> for CliError {
    fn from(e: invnet_core::Error) -> Self {
        use invnet_core::Error::*;
        match e {
            Schema(_) | InvalidSpec { .. } | Dimension(_) => CliError::Config(e),
            _ => CliError::Solver(e),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
