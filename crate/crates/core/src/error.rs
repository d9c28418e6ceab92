use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit reports.
///
/// Variants split into two families: I/O failures (the file system or a
/// stream misbehaved) and data failures (the input was read but violates a
/// contract). [`Error::is_io`] tells them apart for callers that map errors
/// to exit statuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("stream read failed: {0}")]
    Stream(#[source] io::Error),

    #[error("{}: {source}", path.display())]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("{what}: expected {expected_w}x{expected_h}, found {found_w}x{found_h}")]
    DimensionMismatch {
        what: String,
        expected_w: u32,
        expected_h: u32,
        found_w: u32,
        found_h: u32,
    },

    #[error("raw stream ended mid-frame: frame {frame_index} has {got} of {need} bytes")]
    TruncatedStream {
        frame_index: u64,
        got: usize,
        need: usize,
    },

    #[error("invalid layout: {0}")]
    Layout(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("{path}, line {line}: {message}")]
    Csv {
        path: String,
        line: u64,
        message: String,
    },

    #[error("{what} needs at least {required} values, got {found}")]
    InsufficientData {
        what: &'static str,
        required: usize,
        found: usize,
    },

    #[error("{0}: zero variance")]
    ZeroVariance(&'static str),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("point ({x}, {y}) outside {width}x{height} scene")]
    OutOfBounds {
        x: i64,
        y: i64,
        width: u32,
        height: u32,
    },

    #[error("frame {0} has a valid sample without an ROI label")]
    Unannotated(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} did not converge")]
    NoConvergence(&'static str),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn dims(what: impl Into<String>, expected: (u32, u32), found: (u32, u32)) -> Self {
        Error::DimensionMismatch {
            what: what.into(),
            expected_w: expected.0,
            expected_h: expected.1,
            found_w: found.0,
            found_h: found.1,
        }
    }

    /// True when the failure came from the environment rather than the data.
    pub fn is_io(&self) -> bool {
        match self {
            Error::Io { .. } | Error::Stream(_) => true,
            Error::Image { source, .. } => matches!(source, image::ImageError::IoError(_)),
            _ => false,
        }
    }
}
