use thiserror::Error;

use crate::path::PathWitness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a directed cycle through element {0}")]
    CycleDetected(usize),
    #[error("index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} components, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("components {earlier} and {later} are not totally ordered")]
    OrderViolation { earlier: usize, later: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("poset has width {0}, more than 2")]
    WidthExceeded(usize),
    #[error("incomparability graph is disconnected or has fewer than two vertices")]
    IncGraphDisconnected,
    #[error("search budget exhausted; best witness has length {}", best.length())]
    SearchBudgetExceeded { best: PathWitness },
    #[error("embedding search exhausted its budget after {nodes} nodes")]
    EmbeddingBudgetExceeded { nodes: u64 },
    #[error("expected a witness of kind {expected:?}, got {got:?}")]
    KindMismatch {
        expected: crate::path::PathKind,
        got: crate::path::PathKind,
    },
    #[error("vertex {0} has no neighbour on the spine")]
    NoSpineNeighbor(usize),
    #[error("poset is not an interval order")]
    NotIntervalOrder,
    #[error("invalid attachment: {0}")]
    InvalidAttachment(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
