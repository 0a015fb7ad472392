use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("label `{0}` does not occur exactly twice")]
    MissingPartner(String),
    #[error("face `{0}` has no sides")]
    EmptyFace(String),
    #[error("unknown edge label `{0}`")]
    UnknownLabel(String),
    #[error("chosen labels do not form a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("operation requires a single face, complex has {0}")]
    MultiFace(usize),
    #[error("complex is not orientable")]
    NonOrientable,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate passage {0}")]
    DuplicateCrossing(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curves are not in general position: {0}")]
    NotInGeneralPosition(String),
    #[error("bigon reduction failed to make progress after {0} iterations")]
    IterationLimit(usize),
    #[error("({0}, {1}) is not a primitive vector")]
    NotPrimitive(i64, i64),
    #[error("union of the curves is disconnected")]
    DisconnectedUnion,
    #[error("curves do not pairwise intersect exactly once: {0}")]
    NotPairwiseOnce(String),
    #[error("label set does not concatenate into one closed curve: {0}")]
    NotTwoCurves(String),
    #[error("vertex class {0} is not an alternating 4-valent crossing")]
    NotTransverse(usize),
    #[error("nothing found within the search budget")]
    NotFound,
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("gluing constraints admit no solution")]
    InfeasibleConstraints,
    #[error("arc is not dual to the system: {0}")]
    ArcNotDual(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
