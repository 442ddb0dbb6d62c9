use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("vertex {label} is out of range 1..={n}")]
    VertexOutOfRange { label: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("edge index {index} out of range (hypergraph has {edges} edges)")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
    #[error("hypergraph has no edges")]
    TrivialHypergraph,
    #[error("expected a {expected}-uniform hypergraph")]
    NotUniform { expected: String },
    #[error("vertex {label} is isolated")]
    IsolatedVertex { label: usize },
    #[error("trace event {event} does not replay: {reason}")]
    InvalidTrace { event: usize, reason: String },
    #[error("m must be at least 1")]
    InvalidM,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("search budget exceeded: component with {component_size} vertices needs {required} closure evaluations up to seed size {seed_size}, budget is {budget}")]
    BudgetExceeded { component_size: usize, seed_size: usize, required: u128, budget: u64 },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse { line: e.line(), message: e.to_string() }
    }
}
