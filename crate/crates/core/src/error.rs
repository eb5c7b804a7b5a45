use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {label} is out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("{what} is limited to n <= {max}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    #[error("vertex {0} is already a vertex of the complex")]
    VertexPresent(usize),
    #[error("star dimension must be at least 1")]
    ZeroDimension,
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("empty construction string")]
    EmptyString,
    #[error("illegal character {ch:?} at position {pos}")]
    IllegalChar { ch: char, pos: usize },
    #[error("bar at position {pos} is not followed by an S")]
    DanglingBar { pos: usize },
    #[error("construction string contains a dimension bar")]
    ContainsBar,
    #[error("graph is not threshold (elimination stuck on {stuck:?})")]
    NotThreshold { stuck: Vec<usize> },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
