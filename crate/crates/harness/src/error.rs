use closurelab_core::closure::ClosureError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] closurelab_core::Error),
    #[error(transparent)]
    Closure(Box<ClosureError>),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<ClosureError> for CliError {
    fn from(e: ClosureError) -> Self {
        CliError::Closure(Box::new(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(closurelab_core::Error::BudgetExceeded(_)) => 3,
            CliError::Closure(e) if e.is_budget() => 3,
            _ => 1,
        }
    }
}
