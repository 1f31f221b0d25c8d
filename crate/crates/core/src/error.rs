use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("induced subgraph on the given vertices is not connected")]
    DisconnectedSubgraph,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("point count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("more than one middle point for {{{0}, {1}, {2}}}")]
    TrichotomyViolation(usize, usize, usize),
    #[error("triple ({0} {1} {2}) repeats a point")]
    DegenerateTriple(usize, usize, usize),
    #[error("point {index} out of range for {n} points")]
    OutOfRange { index: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid weighted graph: {0}")]
    InvalidWeights(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("weighted graph is not tight")]
    NotTight,
    #[error("weighted graph does not induce the given structure")]
    StructureMismatch,
    #[error("input too large: {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("input too small: {size} is below minimum {min}")]
    TooSmall { size: usize, min: usize },
    #[error("path is a geodesic")]
    PathIsGeodesic,
    #[error("path is not an induced path of the graph")]
    PathNotInduced,
    #[error("epsilon must satisfy 0 < eps < 1/{0}")]
    BadEpsilon(usize),
    #[error("graph is a block graph")]
    IsBlockGraph,
    #[error("graph is not distance-hereditary")]
    NotDistanceHereditary,
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
