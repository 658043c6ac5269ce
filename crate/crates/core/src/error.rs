use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} outside valid range [{lo}, {hi}]")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("window [{lo}, {hi}] exceeds sequence range [{seq_lo}, {seq_hi}]")]
    WindowOutOfRange {
        lo: i64,
        hi: i64,
        seq_lo: i64,
        seq_hi: i64,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("empty interval: lower end must be below upper end")]
    EmptyInterval,

    #[error("series order {available} too small, at least {required} required")]
    InsufficientOrder { required: usize, available: usize },

    #[error("coefficient {index} read beyond series order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("operator application leaves an empty index domain")]
    EmptyDomain,

    #[error("sequence ceiling {given} too small, at least {required} required")]
    InsufficientCeiling { required: usize, given: usize },

    #[error("sturm and hankel verdicts disagree on a simple-rooted polynomial: {0}")]
    MethodDisagreement(String),

    #[error("internal integrity failure: {0}")]
    Integrity(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
