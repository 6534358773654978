use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("operation requires at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("{what}: {n} vertices exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    Disconnected,
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
