use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid edge {vertices:?}: {reason}")]
    InvalidEdge { vertices: Vec<u32>, reason: String },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<u32>),

    #[error("edge {0:?} is not present")]
    MissingEdge(Vec<u32>),

    #[error("invalid vertex set {vertices:?}: {reason}")]
    InvalidSet { vertices: Vec<u32>, reason: String },

    #[error("degree order {i} out of range 1..={k}")]
    DegreeOrder { i: usize, k: usize },

    #[error("invalid hypergraph dimensions: {0}")]
    Dimensions(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("pattern parameters violate {constraint}")]
    PatternParameters { constraint: String },

    #[error("theorem hypotheses not met: {0}")]
    NotApplicable(String),

    #[error(
        "memory budget exceeded: C(n,k) = {edges} edges needs {needed} bytes, budget {budget}"
    )]
    MemoryBudget {
        edges: u64,
        needed: u64,
        budget: u64,
    },

    #[error("invalid probability {0}")]
    Probability(f64),

    #[error("root tuple and target set overlap at vertex {0}")]
    RootOverlap(u32),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
