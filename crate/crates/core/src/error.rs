use thiserror::Error;

/// Errors raised by series, array and sequence operations.
///
/// The variants split into three families: input/validation problems
/// (`OrderMismatch`, `Invalid`, `Parse`), violated mathematical
/// preconditions (`Precondition`) and internal consistency failures
/// (`Defect`), which indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Precondition(String),

    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }

    /// True for violated mathematical preconditions.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precondition(_))
    }

    /// True for malformed input or validation failures.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::OrderMismatch { .. } | Error::Invalid(_) | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_orders(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::OrderMismatch { left, right })
    }
}
