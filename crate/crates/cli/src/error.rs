use std::path::PathBuf;

use thiserror::Error;

/// Failures of a command. `Display` is a single line `Kind: detail`.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("Usage: {0}")]
    Usage(String),
    #[error("UnknownKnot: {0}")]
    UnknownKnot(String),
    #[error("BadAlpha: {0}")]
    BadAlpha(String),
    #[error("ParseError: {path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ValidationError: entry {name:?}: {reason}")]
    Validation { name: String, reason: String },
    #[error("DuplicateName: {0}")]
    DuplicateName(String),
    #[error("IoError: {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{0}")]
    Core(#[from] ltsig_core::Error),
}

impl CliError {
    /// 2 for usage and input errors, 3 when the input leaves the domain of a
    /// formula, 4 when an internal consistency check fails.
    pub fn exit_code(&self) -> u8 {
        use ltsig_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::ParityViolation { .. } => 4,
                E::NotPrimePower { .. }
                | E::NotHomologySphereCover { .. }
                | E::NotCoprime { .. }
                | E::InvalidParameter(_)
                | E::NearJump { .. } => 3,
                _ => 2,
            },
            _ => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>, err: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}

/// Collapses a message onto one line.
pub fn single_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}
