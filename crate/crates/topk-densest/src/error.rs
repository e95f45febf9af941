//! Error taxonomy shared by the library and the CLI.
//!
//! The CLI maps variants onto process exit codes: parse and contract
//! errors exit 2, budget errors exit 3, certification refusals exit 4.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph or collection input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An operation precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// No set satisfies the stated constraints.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The exhaustive oracle refused an instance larger than its budget.
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    /// The hardness-reduction extractor refused to certify a partition.
    #[error("certification refused: {0}")]
    CertificationRefused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Contract(_) | Error::Infeasible(_) => 2,
            Error::BudgetExceeded(_) => 3,
            Error::CertificationRefused(_) => 4,
        }
    }
}
