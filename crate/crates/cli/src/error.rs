use wbcast_core::Error as CoreError;

/// Failure of a CLI run, carrying the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("impossible branch: {0}")]
    ImpossibleBranch(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidInput(_) => 2,
            CliError::ImpossibleBranch(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::InvalidParams(_) | CoreError::OutOfRange { .. } => {
                CliError::InvalidInput(err.to_string())
            }
            CoreError::ImpossibleBranch { .. } => CliError::ImpossibleBranch(err.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}
