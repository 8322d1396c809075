use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum KloopError {
    #[error("MalformedInput: line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("bad subset literal {literal:?}: {message}")]
    BadSubset { literal: String, message: String },

    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] kloop_core::Error),
}

impl KloopError {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        KloopError::MalformedInput { line, message: message.into() }
    }
}

pub type Result<T, E = KloopError> = std::result::Result<T, E>;
