use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("ambient size {n} too small, need at least {needed}")]
    AmbientTooSmall { n: usize, needed: usize },

    #[error("height {height} at position {position} does not fit {n} wires")]
    HeightOutOfRange {
        position: usize,
        height: usize,
        n: usize,
    },

    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("cannot push up the crossing at position {0}: it is already on the zeroth row")]
    PushAtZero(usize),

    #[error("word is reduced, it has no defect")]
    AlreadyReduced,

    #[error("word is not nearly reduced at position {0}")]
    NotNearlyReduced(usize),

    #[error("wires {0} and {1} do not cross")]
    PairDoesNotCross(usize, usize),

    #[error("wire {wire} sits on the bottom row {row}, there is no wire below it")]
    NoWireBelow { wire: usize, row: usize },

    #[error("wire {0} is not present in the diagram")]
    NoSuchWire(usize),

    #[error("not a transposition of wire labels")]
    NotATransposition,

    #[error("invalid partition: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("not a standard Young tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid insertion sequence: {0}")]
    InvalidSequence(String),

    #[error("inconsistent growth path at step {step}: {reason}")]
    InconsistentPath { step: usize, reason: String },

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("top-gap rule disagrees with direct bump-delete at rank {rank}: {detail}")]
    LambdaXMismatch { rank: usize, detail: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}
