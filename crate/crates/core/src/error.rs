use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({}, {}) references a vertex outside 0..{n}", edge.0, edge.1)]
    VertexOutOfRange { edge: (usize, usize), n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} is not in 0..{n}")]
    InvalidVertex { v: usize, n: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("edge ({0}, {1}) is not an edge of the host graph")]
    ForeignEdge(usize, usize),
    #[error("source and sink are the same vertex {0}")]
    SameEndpoints(usize),
    #[error("enumeration of {count} subsets exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("dimension must be at least {min}, got {got}")]
    Dimension { min: usize, got: usize },
    #[error("cannot join networks of dimension {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid bijection: {0}")]
    Bijection(String),
    #[error("line graph has no f-vertex information")]
    NoHalves,
    #[error("structural integrity failure: {0}")]
    Integrity(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown {what} `{name}`")]
    UnknownName { what: &'static str, name: String },
    #[error("{0}")]
    Campaign(String),
}
