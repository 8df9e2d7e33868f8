use thiserror::Error;

use crate::families::Kind;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// graph6 or edge-list input could not be decoded.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The graph is not in a family the operation supports.
    #[error("unsupported family {kind:?}: {message}")]
    Classification { kind: Kind, message: String },

    /// An exact value was required but only an interval is available.
    #[error("uncovered graph {graph6}: {message}")]
    Uncovered { graph6: String, message: String },

    /// A construction step failed although its preconditions held.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Structural and definitional criticality verdicts disagree.
    #[error("criticality methods disagree on {graph6}: {message}")]
    Disagreement { graph6: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn arg(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }
}
