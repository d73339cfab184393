use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("type error at {path}: {msg}")]
    Type { path: String, msg: String },
    #[error(transparent)]
    Engine(#[from] symfun::Error),
}

impl CliError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            CliError::Syntax { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}
