use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),

    #[error("invalid root alpha_({i},{j}) in rank {n}")]
    InvalidRoot { i: usize, j: usize, n: usize },

    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("word {word:?} is not a reduced decomposition of the longest element in rank {n}")]
    NotReduced { word: Vec<usize>, n: usize },

    #[error("index {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight has {got} coefficients, rank is {n}")]
    WeightLength { got: usize, n: usize },

    #[error("negative weight coefficient {0}")]
    NegativeWeight(i64),

    #[error("support function of an empty point set")]
    EmptyPointSet,

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("tiling construction failed at step {step}: labels {s} and {t} are not adjacent in the border")]
    NonAdjacentLabels { step: usize, s: usize, t: usize },

    #[error("malformed tiling: {0}")]
    MalformedTiling(String),

    #[error("peeling stalled for s = {s} with {remaining} tiles left")]
    PeelStall { s: usize, remaining: usize },

    #[error("graph has {count} edges of color {color} at vertex {vertex:?}")]
    MultipleEdges {
        vertex: Vec<i64>,
        color: usize,
        count: usize,
    },

    #[error("point {0:?} lies outside the polytope")]
    OutsidePolytope(Vec<i64>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
