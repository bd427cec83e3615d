use parteq_core::{BijectionError, EnumerateError, ParseError};

/// Everything that ends a command early, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Limit(#[from] EnumerateError),
    #[error("not in the domain: {0}")]
    Domain(String),
    #[error("{0}")]
    Integrity(String),
    /// A verification ran and found a counterexample.
    #[error("verification failed: {0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Domain(_) => 4,
            CliError::Integrity(_) => 5,
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        match e {
            BijectionError::Domain(reason) => CliError::Domain(reason),
            other => CliError::Integrity(other.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(format!("cannot parse input: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("cannot parse JSON input: {e}"))
    }
}
