use thiserror::Error;

/// Errors raised by the library.
///
/// Every fallible operation distinguishes between inputs that are outside
/// the mathematical domain of the formula being evaluated (`Domain`) and
/// iterative procedures that ran out of budget (`Convergence`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),
    #[error("convergence: {0}")]
    Convergence(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }

    pub fn is_convergence(&self) -> bool {
        matches!(self, Error::Convergence(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
