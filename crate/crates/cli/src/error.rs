use lisword_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("{0}")]
    CapExceeded(CoreError),

    #[error("{0}")]
    Core(CoreError),

    #[error("cannot read config {path}: {source}")]
    Config {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::CapExceeded { .. } => CliError::CapExceeded(err),
            CoreError::InvalidArgument(msg) => CliError::Usage(msg),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 1 invariant violation or failure, 2 usage error, 3 resource cap exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } => 2,
            CliError::CapExceeded(_) => 3,
            _ => 1,
        }
    }
}
