//! Error type shared across the crate, with process exit-code mapping for the CLI.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller passed an argument outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A run configuration failed validation before any work started.
    #[error("invalid config: {0}")]
    Config(String),

    /// A lookup into a calibration table or similar registry missed.
    #[error("lookup failed: {0}")]
    Lookup(String),

    /// A data file could not be decoded; `offset` is the byte where decoding stopped.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: u64, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Training produced a non-finite loss and was aborted.
    #[error("training diverged: {0}")]
    Diverged(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// CLI exit code: 1 config error, 2 data error, 3 training divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Config(_) | Error::Lookup(_) => 1,
            Error::Parse { .. } | Error::Io { .. } => 2,
            Error::Diverged(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
