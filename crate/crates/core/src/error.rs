use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}{1} is not an edge")]
    NoSuchEdge(usize, usize),
    #[error("order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("adjacency rows are not a simple undirected graph: {0}")]
    NotSymmetric(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parameters do not describe a simple graph: {0}")]
    NotSimple(String),
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },
    #[error("pattern of order {0} is too large (at most 6 vertices)")]
    PatternTooLarge(usize),
    #[error("the given cycle is not a cummerbund: {0}")]
    NotACummerbund(String),
    #[error("universe too large: {0}")]
    UniverseTooLarge(String),
    #[error("search budget of {0} node expansions exhausted")]
    Timeout(u64),
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
