use edgesym_core::invariants::InvariantError;
use edgesym_core::{GraphError, IdealError, PolyhedronError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("{0}; pass --force or raise --max-n to run it anyway")]
    Guard(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Edgeless => 3,
            CliError::Guard(_) => 4,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Edgeless => CliError::Edgeless,
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<PolyhedronError> for CliError {
    fn from(e: PolyhedronError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Ideal(e) => e.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}
