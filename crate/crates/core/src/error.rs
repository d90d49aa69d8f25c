use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),
    #[error("root closure did not terminate after {0} roots (malformed Gram data?)")]
    NonTerminatingClosure(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("mirror does not have norm 2")]
    BadMirror,
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("generator index {index} out of range for rank {rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("group enumeration exceeded the guard of {0} elements")]
    GuardExceeded(usize),
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("set is not mutually orthogonal")]
    NotOrthogonal,
    #[error("no orthogonal mate for root {0}")]
    NoMate(usize),
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
    #[error("engine invariant violated: {0}")]
    Engine(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
