use thiserror::Error;

/// Errors raised by poset, lattice, symmetry and topology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} rows, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("size {0} exceeds the capacity of 64 elements")]
    Capacity(usize),

    #[error("relation ({lo}, {hi}) violates the natural labeling")]
    NaturalLabeling { lo: usize, hi: usize },

    #[error("not a poset vector: {above} is present but {below} below it is not")]
    NotPosetVector { above: usize, below: usize },

    #[error("index {index} out of range for size {n}")]
    Index { index: usize, n: usize },

    #[error("elements {lo} and {hi} are comparable")]
    NotAntichain { lo: usize, hi: usize },

    #[error("permutation of degree {found} applied to size {expected}")]
    Degree { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),

    #[error("permutation {0:?} is not an automorphism")]
    NotAutomorphism(Vec<usize>),

    #[error("invalid poset matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("set {0} is not a member of the topology")]
    NotMember(String),

    #[error("cannot cut a topology of size 0")]
    EmptyCut,

    #[error("group order does not fit in 128 bits")]
    Overflow,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > crate::bits::MAX_N {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}
