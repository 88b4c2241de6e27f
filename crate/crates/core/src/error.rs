use thiserror::Error;

/// Library-wide error type. Variants mirror the failure modes of the
/// individual subsystems so callers can match on them directly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range for graph of order {1}")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("empty vertex set")]
    EmptySet,
    #[error("map is not a subgraph embedding: {0}")]
    NotASubgraphMap(String),
    #[error("invalid rotation system: {0}")]
    BadRotation(String),
    #[error("rotation system does not describe a sphere embedding (n - m + f = {0}, expected 2)")]
    NonPlanarGenus(i64),
    #[error("not a maximal planar graph: {0}")]
    NotMaximalPlanar(String),
    #[error("not a simple cycle of the graph: {0}")]
    NotACycle(String),
    #[error("face {0} is not a triangle")]
    NotTriangle(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("configuration matches no case of the dispatch table: {0}")]
    UnclassifiableConfiguration(String),
    #[error("alpha = {alpha} is below the minimum {min} for this operation")]
    AlphaTooSmall { alpha: u32, min: u32 },
    #[error("case dispatch produced a host that failed verification: {0}")]
    CaseDispatchFailure(String),
    #[error("quasi-eccentric face criterion fails at vertex {vertex}")]
    CriterionFails { vertex: usize },
    #[error("invalid gadget spec: {0}")]
    InvalidSpec(String),
    #[error("face/gadget mismatch: {0}")]
    FaceMismatch(String),
    #[error("gluing hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("edge {0}-{1} is not present")]
    NoSuchEdge(usize, usize),
    #[error("order {0} too small (minimum {1})")]
    TooSmall(usize, usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
