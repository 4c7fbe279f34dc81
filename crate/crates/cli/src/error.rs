use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("cannot compare a {0}-vertex shape with a {1}-vertex shape")]
    ArityMismatch(usize, usize),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Geometry(#[from] shapenorm::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Token printed on the diagnostic stream.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::ArityMismatch(..) => "ArityMismatch",
            CliError::Usage(_) => "UsageError",
            CliError::Geometry(e) => e.code(),
            CliError::Io { .. } => "IoError",
        }
    }

    /// 2 for parse and validation problems, 3 for geometric domain errors,
    /// 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        use shapenorm::Error as E;
        match self {
            CliError::Parse(_) | CliError::ArityMismatch(..) | CliError::Usage(_) => 2,
            CliError::Geometry(e) => match e {
                E::NonFinite
                | E::InvalidTolerance(_)
                | E::InvalidSides(_)
                | E::InvalidTriangle(_) => 2,
                _ => 3,
            },
            CliError::Io { .. } => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
