use alloc::string::String;

/// Errors raised by graph construction, the oracles and the engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An explicit enumeration budget was exhausted.
    #[error("{what} budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: usize },
    /// A solver returned a non-integral or otherwise inconsistent vertex where
    /// the constraint matrix guarantees an integral one.
    #[error("integrality violation: {0}")]
    Integrality(String),
    /// A produced certificate failed an exact check.
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error("linear program is {0}")]
    LpStatus(&'static str),
    #[error("cop strategy failed: {0}")]
    Strategy(String),
    #[error("illegal robber move: {0}")]
    IllegalMove(String),
    #[error("nothing found within the search budget")]
    NotFound,
}

pub type Result<T> = core::result::Result<T, Error>;
