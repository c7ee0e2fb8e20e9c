use thiserror::Error;

use crate::grid::{Edge, Vertex};
use crate::words::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid letter {0:?}, expected '0' or '1'")]
    InvalidLetter(char),
    #[error("words have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("words {0} and {1} have different numbers of ones")]
    WeightMismatch(Word, Word),
    #[error("{0} is not dominated by {1}")]
    NotDominated(Word, Word),
    #[error("pair ({0}, {1}) lies outside the domain of g")]
    OutOfDomain(Word, Word),
    #[error("rows {0:?} do not form a partition inside the box")]
    NotAPartition(Vec<usize>),
    #[error("inner shape is not contained in outer shape")]
    NotContained,
    #[error("chain must contain at least one word")]
    EmptyChain,
    #[error("step {step}: {from} -> {to} is not a horizontal strip")]
    NotAStrip { step: usize, from: Word, to: Word },
    #[error("tableau has entry {0} but only {1} steps were requested")]
    TooFewSteps(usize, usize),
}

/// First violated clause of the TFPL definition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("clause 1: external edge below x={0} is {1}")]
    ExternalEdge(i32, &'static str),
    #[error("clause 2: boundary vertex {0:?} has degree {1}")]
    BoundaryDegree(Vertex, usize),
    #[error("clause 3: vertex {0:?} has degree {1}")]
    InnerDegree(Vertex, usize),
    #[error("clause 4: path joins {0:?} and {1:?}")]
    ForbiddenPath(Vertex, Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TfplError {
    #[error("invalid TFPL: {0}")]
    Invalid(#[from] Violation),
    #[error("edge {0:?} is not in the grid of size {1}")]
    EdgeOutOfGrid(Edge, usize),
    #[error("vertex {0:?} is not in the grid of size {1}")]
    VertexOutOfGrid(Vertex, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DriftError {
    #[error(transparent)]
    Tfpl(#[from] TfplError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("{minus} is not a valid predecessor of {word} for this drift")]
    NotPredecessor { minus: Word, word: Word },
    #[error("excess {0} is not supported here (at most 2)")]
    UnsupportedExcess(i64),
    #[error("edge {0:?} is not a drifter")]
    NotADrifter(Edge),
    #[error("local move of drifter {0:?} did not stay local")]
    Locality(Edge),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("table is missing the entry for ({0}, {1}; {2})")]
    Incomplete(Word, Word, Word),
}
