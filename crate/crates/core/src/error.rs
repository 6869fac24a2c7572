use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("quiver has an oriented cycle through `{0}`")]
    Cyclic(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("modules live over different quivers")]
    AlgebraMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("degree cap {cap} reached before the quotient vanished; dimensions so far: {partial:?}")]
    DegreeCap { cap: usize, partial: Vec<usize> },
    #[error("module of dimension {dim} exceeds the size budget {budget}")]
    SizeCap { dim: usize, budget: usize },
    #[error("integer overflow in root coordinates")]
    Overflow,
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
