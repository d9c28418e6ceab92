use thiserror::Error;

/// A failed run, split by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<gazekit::Error> for CliError {
    fn from(e: gazekit::Error) -> Self {
        if e.is_io() {
            CliError::Io(e.to_string())
        } else {
            CliError::Data(e.to_string())
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

pub fn io_err(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}
