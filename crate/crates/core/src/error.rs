use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (shape mismatch, zero dimension, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A runtime contract failed — e.g. an apply/adjoint pair that is not
    /// actually adjoint, or a provably-nonnegative quantity coming out negative.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The parameter is outside the supported regime (e.g. a prime with the
    /// wrong residue class), as opposed to being malformed.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// An exhaustive routine was asked for an instance beyond its size cap.
    #[error("instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
