use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input")]
    ZeroInput,
    #[error("requires squarefree polynomial")]
    NotSquarefree,
    #[error("not a cubic")]
    NotCubic,
    #[error("root finder did not converge")]
    NoConvergence,
    #[error("invalid interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("polynomial is not divisible by x^{0}")]
    NotDivisibleByX(usize),
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),
    #[error("edge not present: ({0}, {1})")]
    EdgeNotPresent(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("instance too large for {what}: {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("instance too large for brute force: {size} vertices exceeds cap {cap}")]
    BruteForceCap { size: usize, cap: usize },
    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a tree")]
    NotATree,
    #[error("matrix is not square")]
    NonSquare,
}

impl Error {
    /// True for errors raised by a size guard rather than by bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::BruteForceCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
