use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A slice or search space exceeded the configured cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// A tensor or relation space is degenerate where non-degeneracy is required.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An operation's precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A claimed periodicity isomorphism does not transport the relations.
    #[error("not periodic: {0}")]
    NotPeriodic(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
