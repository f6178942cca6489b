use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid signed permutation {0:?}")]
    InvalidPermutation(Vec<i32>),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("parabolic subset {subset:?} generates an infinite group (more than {bound} elements)")]
    InfiniteParabolic { subset: Vec<usize>, bound: usize },

    #[error("element is not fixed by the diagram involution")]
    NotSigmaFixed,

    #[error("cannot evaluate at q = 0: negative exponents present")]
    ZeroEvaluation,

    #[error("support outside the domain of the character: {0}")]
    OutsideCharacterDomain(String),

    #[error("character value {value} for t_{index} violates the quadratic relation")]
    InvalidCharacterValue { index: usize, value: String },

    #[error("length bound {given} is insufficient; {required} is required")]
    InsufficientLengthBound { given: usize, required: usize },

    #[error("degenerate character: a = 0 mod {0}")]
    DegenerateCharacter(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
