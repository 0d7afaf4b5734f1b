use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("invalid json: {0}")]
    Json(String),

    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} has {found} vertices, expected {expected}")]
    WrongEdgeLength { edge: String, expected: usize, found: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("unknown statement `{0}`")]
    UnknownStatement(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `n r` (or `n` for a set family)")]
    MalformedHeader,
    #[error("missing header line")]
    MissingHeader,
    #[error("`{0}` is not a vertex id")]
    NotAnInteger(String),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated within an edge")]
    DuplicateVertex(usize),
    #[error("vertices must be strictly increasing")]
    NotIncreasing,
    #[error("edge has {found} vertices, expected {expected}")]
    WrongEdgeLength { expected: usize, found: usize },
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
