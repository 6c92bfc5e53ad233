//! Error types shared across the crate.

use std::fmt;

/// Errors raised while building or querying a [`crate::graph::WeightMatrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A matrix needs at least one vertex.
    EmptyGraph,
    /// Vertex index outside `0..n`.
    IndexOutOfRange { index: usize, n: usize },
    /// Edge endpoints must satisfy `i < j`.
    EdgeOrder { i: usize, j: usize },
    /// The same vertex pair was listed twice.
    DuplicateEdge { i: usize, j: usize },
    /// A sign or coordinate vector has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// Cut assignments must hold exactly -1 or +1.
    InvalidSign { index: usize, value: i8 },
    /// `side_weights` was asked about a vertex already inside U or D.
    VertexInSide { vertex: usize },
    /// Integer weights are too large: sums formed by the solvers could overflow.
    WeightOverflow,
    /// Real weights must be finite.
    NonFiniteWeight,
    /// Dense input was not symmetric at `(i, j)`.
    AsymmetricEntry { i: usize, j: usize },
    /// Dense input carried a non-zero diagonal entry.
    NonZeroDiagonal { i: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyGraph => write!(f, "graph needs at least one vertex"),
            GraphError::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for n={n}")
            }
            GraphError::EdgeOrder { i, j } => {
                write!(f, "edge ({i}, {j}) requires i < j")
            }
            GraphError::DuplicateEdge { i, j } => {
                write!(f, "duplicate edge ({i}, {j})")
            }
            GraphError::LengthMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            GraphError::InvalidSign { index, value } => {
                write!(f, "sign at index {index} is {value}, must be -1 or +1")
            }
            GraphError::VertexInSide { vertex } => {
                write!(f, "vertex {vertex} is already inside U or D")
            }
            GraphError::WeightOverflow => {
                write!(f, "integer weights too large: solver sums could overflow")
            }
            GraphError::NonFiniteWeight => write!(f, "weights must be finite"),
            GraphError::AsymmetricEntry { i, j } => {
                write!(f, "dense matrix not symmetric at ({i}, {j})")
            }
            GraphError::NonZeroDiagonal { i } => {
                write!(f, "dense matrix has non-zero diagonal entry at {i}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Errors raised by the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Graph(GraphError),
    /// The solver needs more vertices than the instance has.
    TooFewVertices { n: usize, need: usize },
    /// Exact enumeration was requested beyond the configured size limit.
    TooLarge { n: usize, max: usize },
    /// A sequential-greedy order was not a permutation of the vertices.
    NotAPermutation,
    /// `sg_solve` was handed the adaptive marker; use `sg3_solve` instead.
    AdaptiveOrder,
    /// A contraction step referenced an endpoint that is no longer active.
    InactiveEndpoint { vertex: usize },
    /// A contraction step picked an edge whose weight is (numerically) zero.
    ZeroPickWeight,
    /// Sign propagation found a cycle: the forest is corrupted.
    CyclicForest,
    /// A forest edge is malformed (self-loop, bad index, or bad sign).
    InvalidForestEdge { i: usize, j: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Graph(e) => write!(f, "{e}"),
            SolveError::TooFewVertices { n, need } => {
                write!(f, "instance has {n} vertices, solver needs at least {need}")
            }
            SolveError::TooLarge { n, max } => {
                write!(f, "exact solve refused: n={n} exceeds limit {max}")
            }
            SolveError::NotAPermutation => write!(f, "order is not a permutation of the vertices"),
            SolveError::AdaptiveOrder => {
                write!(f, "adaptive order marker is not valid for fixed-order SG")
            }
            SolveError::InactiveEndpoint { vertex } => {
                write!(f, "contraction endpoint {vertex} is not active")
            }
            SolveError::ZeroPickWeight => write!(f, "picked edge has zero weight"),
            SolveError::CyclicForest => write!(f, "cycle detected: forest is corrupted"),
            SolveError::InvalidForestEdge { i, j } => {
                write!(f, "invalid forest edge ({i}, {j})")
            }
        }
    }
}

impl std::error::Error for SolveError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SolveError::Graph(e) => Some(e),
            _ => None,
        }
    }
}

impl From<GraphError> for SolveError {
    fn from(e: GraphError) -> Self {
        SolveError::Graph(e)
    }
}

/// Errors raised while reading TSPLIB or MCUT instance files.
#[derive(Debug)]
pub enum ParseError {
    Io { path: String, source: std::io::Error },
    MissingKeyword(&'static str),
    UnsupportedWeightType(String),
    UnsupportedWeightFormat(String),
    /// A token could not be parsed as a number.
    BadToken { line: usize, token: String },
    /// A data section held the wrong number of values.
    SectionLength { section: &'static str, expected: usize, got: usize },
    /// Generic grammar violation with its line number.
    Syntax { line: usize, message: String },
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Io { path, source } => write!(f, "{path}: {source}"),
            ParseError::MissingKeyword(k) => write!(f, "missing required keyword {k}"),
            ParseError::UnsupportedWeightType(t) => {
                write!(f, "unsupported EDGE_WEIGHT_TYPE {t} (supported: EXPLICIT, EUC_2D)")
            }
            ParseError::UnsupportedWeightFormat(t) => {
                write!(f, "unsupported EDGE_WEIGHT_FORMAT {t}")
            }
            ParseError::BadToken { line, token } => {
                write!(f, "line {line}: cannot parse token {token:?}")
            }
            ParseError::SectionLength { section, expected, got } => {
                write!(f, "{section} holds {got} values, expected {expected}")
            }
            ParseError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            ParseError::Io { source, .. } => Some(source),
            ParseError::Graph(e) => Some(e),
            _ => None,
        }
    }
}

impl From<GraphError> for ParseError {
    fn from(e: GraphError) -> Self {
        ParseError::Graph(e)
    }
}
