use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what}: {value} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid parameters for {family}: {constraint}")]
    Parameter {
        family: &'static str,
        constraint: String,
    },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("procedure inapplicable: {0}")]
    Inapplicable(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn param(family: &'static str, constraint: impl Into<String>) -> Self {
        Error::Parameter {
            family,
            constraint: constraint.into(),
        }
    }

    /// True for errors caused by a configured size bound.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
