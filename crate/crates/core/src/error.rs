//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("wav error: {0}")]
    Wav(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("fingerprint mismatch: {0}")]
    Fingerprint(String),

    #[error("out-of-vocabulary words: {0:?}")]
    OutOfVocabulary(Vec<String>),

    #[error("unknown task {given:?}; accepted: {accepted}")]
    UnknownTask { given: String, accepted: String },

    #[error("missing prerequisite checkpoint for stage {stage}: {path}")]
    MissingCheckpoint { stage: String, path: String },

    #[error("checkpoint format error: {0}")]
    Checkpoint(String),

    #[error("training error: {0}")]
    Train(String),

    #[error("evaluation failed: {0}")]
    Eval(String),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

impl From<hound::Error> for Error {
    fn from(e: hound::Error) -> Self {
        Error::Wav(e.to_string())
    }
}
