use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("graph order {0} exceeds the 64-vertex bit-vector limit")]
    TooLarge(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("empty induced subgraph")]
    EmptyInducedSubgraph,
    #[error("invalid Cayley spec: {0}")]
    InvalidSpec(String),
    #[error("theorem precondition violated: {0} (use --force to override)")]
    Precondition(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("kernel set is not contained in the support")]
    KernelOutsideSupport,
    #[error("{n} vertices exceeds the exhaustive cap of {cap}; enable sampling")]
    ExhaustiveCap { n: usize, cap: usize },
    #[error("list sizes too small for outdegree at vertices {0:?}")]
    ListTooShort(Vec<usize>),
    #[error("list assignment: {0}")]
    InvalidLists(String),
    #[error("coloring is incomplete at vertex {0}")]
    IncompleteColoring(usize),
    #[error("list-size round invariant violated at vertex {vertex} (color {color})")]
    RoundInvariant { vertex: usize, color: u32 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
