use thiserror::Error;

/// Errors produced by graph construction, spectral routines and the search oracle.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("partition does not match matrix: {0}")]
    PartitionMismatch(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("no real root in the searched range")]
    NoRealRoot,
    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("graph6 decode error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
}

pub type Result<T> = std::result::Result<T, Error>;
