//! Error taxonomy shared by the whole crate.
//!
//! Three kinds of failure are distinguished because they map onto distinct
//! process exit codes in the CLI:
//!
//! * **precondition** — the caller asked for something outside an operation's
//!   stated scope (even modulus, composite prime argument, mismatched
//!   dimensions, ...).  Exit code 1.
//! * **data** — a class-group data file could not be read or failed
//!   validation.  Exit code 2.
//! * **internal** — a consistency check that should be unfailable failed
//!   (e.g. an analytic class-number product did not come out an integer).
//!   Exit code 3; these indicate a bug or corrupted build, never bad input.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's documented scope.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A data file was missing, unreadable, or malformed.
    #[error("data error: {0}")]
    Data(String),

    /// A malformed line in a class-group data file, with its line number.
    #[error("data error at line {line}: {message}")]
    DataLine {
        /// 1-based line number in the offending file.
        line: usize,
        /// Description of what failed to parse or validate.
        message: String,
    },

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Build a precondition error from anything displayable.
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Build a data error from anything displayable.
    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    /// Build an internal-consistency error from anything displayable.
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// The process exit code the CLI uses for this error kind.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Precondition(_) => 1,
            Error::Data(_) | Error::DataLine { .. } => 2,
            Error::Internal(_) => 3,
        }
    }
}
