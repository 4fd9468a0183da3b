use thiserror::Error;

use crate::engine::Configuration;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("cycle needs at least 3 vertices, got {n}")]
    CycleTooShort { n: usize },
    #[error("{family} needs at least one vertex")]
    EmptyGenerator { family: &'static str },
    #[error("part {index} of a multipartite graph is empty")]
    EmptyPart { index: usize },
    #[error("{n} vertices exceeds the subset-mask limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad graph spec `{spec}`: {message}")]
    BadGenerator { spec: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("configuration has {got} stacks but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("orientation has {got} edges but the graph has {expected}")]
    OrientationMismatch { expected: usize, got: usize },
    #[error("stack overflow at vertex {vertex}")]
    Overflow { vertex: usize },
    /// Neither `C_t = C_{t+1}` nor `C_t = C_{t+2}` was seen within the
    /// step budget. `tail` holds the last configurations simulated.
    #[error("no period found within {max_steps} steps")]
    CapExceeded {
        max_steps: usize,
        tail: Vec<Configuration>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{n} vertices is beyond the exhaustive search bound of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("paths need at least {min} vertices, got {n}")]
    TooShort { n: usize, min: usize },
    #[error("value for n = {n} does not fit in 64 bits")]
    Overflow { n: usize },
    #[error("path table disagreement at n = {n}: {detail}")]
    Inconsistent { n: usize, detail: String },
    #[error(transparent)]
    Search(#[from] SearchError),
}
