use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The set has no preimage under the boundary operator.
    #[error("{set} is not in the image of the boundary operator for n = {n}: residue class {residue} has odd size")]
    NotInImage { set: String, n: i64, residue: i64 },

    #[error("{0} is not generative (it must be even with nonzero rank)")]
    NotGenerative(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
