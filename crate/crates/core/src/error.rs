use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{what}: size {size} is below the minimum of {min}")]
    SizeTooSmall {
        what: &'static str,
        size: usize,
        min: usize,
    },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("{lower} does not refine {upper}")]
    OrderViolation { lower: String, upper: String },
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) is out of range for a digraph on {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("not a tournament")]
    NotATournament,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
    #[error("induction needs an element of positive degree")]
    InductOnDegreeZero,
    #[error("friendly counts differ across block orders of {partition}: {counts:?}")]
    SymmetryViolation { partition: String, counts: Vec<u64> },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
