use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Everything a command can fail with, grouped by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}{source}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Core {
        line: Option<usize>,
        #[source]
        source: neutro_core::Error,
    },

    #[error("{}: {source}", .path.display())]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<CliError>,
    },

    #[error("{0}")]
    Catalog(String),

    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub(crate) fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> Self {
        CliError::InFile {
            path: path.to_path_buf(),
            source: Box::new(self),
        }
    }

    /// 1 usage, 2 data, 3 mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 3,
            _ => 2,
        }
    }
}

impl From<neutro_core::Error> for CliError {
    fn from(source: neutro_core::Error) -> Self {
        CliError::Core { line: None, source }
    }
}
