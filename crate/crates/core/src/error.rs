use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("Fock space of dimension {dim} exceeds the cap of {cap}")]
    TooLarge { dim: u128, cap: usize },

    #[error("no such mode: {0}")]
    UnknownMode(String),

    #[error("unknown generator id `{0}`")]
    UnknownGenerator(String),

    #[error("shape mismatch: {0}x{1} against {2}x{3}")]
    Shape(usize, usize, usize, usize),

    #[error("malformed coordinate list at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn config_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Config(msg.into()))
}
