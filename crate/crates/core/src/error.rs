use thiserror::Error;

/// Errors reported by the library.
///
/// The variants are grouped so that a front end can map them onto distinct
/// exit statuses (parse / precondition / size cap / I/O).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("red and blue must cover every vertex; vertex {0} has no color")]
    Uncolored(usize),

    #[error("invalid ordering: {0}")]
    InvalidOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size cap exceeded: {what} is {actual}, limit {limit}")]
    SizeCap {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
