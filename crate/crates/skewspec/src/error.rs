//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph6: bad length header: {0}")]
    Graph6Header(String),
    #[error("graph6: non-printable byte {byte:#04x} at position {pos}")]
    Graph6NonPrintable { byte: u8, pos: usize },
    #[error("graph6: truncated line: expected {expected} data characters, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: trailing garbage: {0}")]
    Graph6Trailing(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),
    #[error("internal: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
