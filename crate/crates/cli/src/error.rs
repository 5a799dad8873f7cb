use pardeg_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input; exit code 1.
    #[error("{0}")]
    Usage(String),
    /// A mathematical assertion failed; exit code 2.
    #[error("{0}")]
    Assertion(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Assertion(_) => 2,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotReduced(_) | CoreError::NotSkew | CoreError::Internal(_) => {
                CliError::Assertion(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}
