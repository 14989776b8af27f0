use thiserror::Error;

use crate::ring::RingDescriptor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },

    #[error("{operation} is not supported on {ring}")]
    Unsupported {
        operation: String,
        ring: RingDescriptor,
    },

    #[error("{ring} has {size} elements, above the enumeration cap of {cap}")]
    CapExceeded {
        ring: RingDescriptor,
        size: String,
        cap: usize,
    },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("witness does not match condition: {0}")]
    WitnessMismatch(String),

    /// A constructed value failed its own defining equations.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn unsupported(operation: impl Into<String>, ring: RingDescriptor) -> Self {
        Error::Unsupported {
            operation: operation.into(),
            ring,
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
