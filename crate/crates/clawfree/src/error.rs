use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices but at most {max} are supported")]
    TooLarge { n: usize, max: usize },
    #[error("budget exceeded: {what} needs {n} vertices but the cap is {cap}")]
    VertexBudget { what: &'static str, n: usize, cap: usize },
    #[error("budget exceeded: {what} passed {cap} enumeration steps")]
    EnumerationBudget { what: &'static str, cap: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for both kinds of budget exhaustion.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::VertexBudget { .. } | Error::EnumerationBudget { .. })
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
