use thiserror::Error;

use crate::hypergraph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("triple {0:?} repeats a vertex")]
    RepeatedVertex([Vertex; 3]),

    #[error("pair ({0}, {0}) is not a pair of distinct vertices")]
    SameVertex(Vertex),

    #[error("vertex sets overlap: {0}")]
    Overlap(String),

    #[error("vertex count {0} is not divisible by 3")]
    NotDivisibleByThree(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("pair ({0}, {1}) does not respect the declared bipartition")]
    NotBipartite(Vertex, Vertex),

    #[error("pair ({0}, {1}) lies outside the declared vertex universe")]
    PairOutsideUniverse(Vertex, Vertex),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("closed form evaluated to non-integral value {0}")]
    NonIntegral(String),

    #[error("edge set is not a matching: {0}")]
    InvalidMatching(String),

    #[error(
        "no routing of the leftover 3-sets through unused absorbers was found after {0} partitions"
    )]
    RoutingFailure(usize),

    #[error("leftover set needs {needed} absorbers but only {available} are available")]
    NotEnoughAbsorbers { needed: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
