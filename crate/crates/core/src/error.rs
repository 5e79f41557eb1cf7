use thiserror::Error;

/// Failure modes shared by every module.
///
/// The variants map one-to-one onto the command-line exit codes: a
/// `Domain` error is a violated precondition, `Resource` a blown
/// factorization or overflow budget, and both `SearchExhausted` and
/// `Inconclusive` mean "no verdict", never "no".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("search exhausted after {bound} candidates")]
    SearchExhausted { bound: usize },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
