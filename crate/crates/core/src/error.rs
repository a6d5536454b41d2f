use thiserror::Error;

/// Errors raised by graph construction and the analysis operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {vertex} (graph has {order} vertices)")]
    UnknownVertex { vertex: usize, order: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("vertex set over a universe of {set} vertices used with a graph of {order} vertices")]
    UniverseMismatch { set: usize, order: usize },

    #[error("loop at vertex {0} is not allowed in an undirected graph")]
    LoopInUndirected(usize),

    #[error("vertex sets must be disjoint (both contain vertex {0})")]
    Overlapping(usize),

    #[error("vertex sequence is not a path: {0}")]
    NotAPath(String),

    #[error("{what} needs {actual} vertices but the budget is {limit}")]
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("ex(p, bowtie) oracle for p = {p} exceeds the vertex budget {limit} (would enumerate about {graphs} labeled graphs)")]
    OracleBudget {
        p: usize,
        limit: usize,
        graphs: u128,
    },

    #[error("{what} exceeded the time budget of {seconds} s (estimated work: {work})")]
    Timeout {
        what: &'static str,
        seconds: u64,
        work: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("matching is not maximal: edge ({0}, {1}) can be added")]
    NotMaximal(usize, usize),

    #[error("graph is not bowtie-free: center {center}, triangles {t1:?} and {t2:?}")]
    NotBowtieFree {
        center: usize,
        t1: (usize, usize),
        t2: (usize, usize),
    },

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A syntax or semantic error in a graph file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
