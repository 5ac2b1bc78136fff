use thiserror::Error;

use crate::diagram::{SiteId, ValidationReport};

/// Errors raised by diagram, pretzel and move operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(ValidationReport),
    #[error("site {0} is not a precrossing")]
    NotAPrecrossing(SiteId),
    #[error("unknown site {0}")]
    UnknownSite(SiteId),
    #[error("invalid pretzel code {code}: {reason}")]
    InvalidCode { code: String, reason: String },
    #[error("state has unresolved precrossings")]
    Unresolved,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("budget exceeded: {what} is {actual}, limit {limit}")]
    BudgetExceeded { what: &'static str, actual: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("stale move instance: {0}")]
    StaleMove(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by search or enumeration limits rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
