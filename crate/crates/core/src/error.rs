use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty permutation")]
    EmptyPermutation,

    #[error("duplicate value {0}")]
    DuplicateValue(usize),

    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("dimension mismatch: configuration has {config} spins, permutation has {perm}")]
    DimensionMismatch { config: usize, perm: usize },

    #[error("vertex budget exceeded: more than {0} vertices")]
    BudgetExceeded(usize),

    #[error("not a cycle")]
    NotACycle,

    #[error("not absorbing")]
    NotAbsorbing,

    #[error("not a vertex: {0}")]
    NotAVertex(String),

    #[error("uniqueness violated: vertex {0} has more than one shortest path from alpha")]
    UniquenessViolated(String),

    #[error("first block not U")]
    FirstBlockNotU,

    #[error("path edges do not chain")]
    BrokenPath,

    #[error("not an increasing subsequence of rho: {0}")]
    NotIncreasing(String),

    #[error("unreachable: {0}")]
    Unreachable(String),

    #[error("size limit exceeded: n = {n}, limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("n too large: {n} (maximum {max})")]
    TooLarge { n: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("illegal character '{0}'")]
    IllegalCharacter(char),

    #[error("wrong length: expected {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
