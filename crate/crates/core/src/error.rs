use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex subset {mask:#x} has bits at or above graph order {order}")]
    InvalidSubset { mask: u64, order: usize },

    #[error("vertex label {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {u}-{v} is a loop; only simple graphs are supported")]
    Loop { u: usize, v: usize },

    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    /// A configured computational bound was hit.
    #[error("resource limit: {what} (bound {limit})")]
    ResourceLimit { what: String, limit: usize },

    #[error("degree of the zero polynomial is undefined")]
    UndefinedDegree,

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// Two independent computation routes disagreed. This is always a bug.
    #[error("internal consistency failure on {invariant}: from Q {extracted}, direct {direct}")]
    InternalConsistency {
        invariant: &'static str,
        extracted: String,
        direct: String,
    },

    #[error("malformed {format} input at token {token:?}: {reason}")]
    Parse {
        format: &'static str,
        token: String,
        reason: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn parse(format: &'static str, token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            format,
            token: token.into(),
            reason: reason.into(),
        }
    }
}
