use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero in K")]
    DivisionByZero,
    #[error("root depth {0} is not supported (only K and K^(1/p))")]
    RootDepth(u8),
    #[error("field already contains p-th roots of its parameters")]
    AlreadyExtended,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("variable `{0}` must have a nonnegative, nonzero degree vector of the ring's grading rank")]
    BadDegree(String),
    #[error("variable `{0}` is bound by more than one relation")]
    DuplicateBoundVariable(String),
    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(usize),
    #[error("relation {0} is not monic in any free variable")]
    NonMonicRelation(usize),
    #[error("relation {relation} is not monic in `{variable}`")]
    NotMonicIn { relation: usize, variable: String },
    #[error("relation {relation} mentions bound variable `{variable}` of another relation")]
    CrossBoundVariable { relation: usize, variable: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("degree vector has length {got}, ring grading has rank {expected}")]
    DegreeRank { expected: usize, got: usize },
    #[error("ring must be Z-graded for this operation")]
    NotZGraded,
    #[error("denominator exponent of `{0}` must be positive in a top Cech fraction")]
    NotTopCechFraction(String),
    #[error("ring is not of the w^(p+1) - t x^(p+1) - x y^p - sum z_i^(p+1) shape: {0}")]
    NotFamilyBShape(String),
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("{0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Io(String),
}
