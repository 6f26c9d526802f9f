use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants map onto violated preconditions; the CLI turns every one of them
/// into exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("partition {partition} is not of type {ty}")]
    WrongType { partition: String, ty: String },

    #[error("invalid Lie type: {0}")]
    InvalidLieType(String),

    #[error("orbit {0} is not special")]
    NotSpecial(String),

    #[error("operation not available in type {family}: {reason}")]
    UnsupportedType { family: char, reason: String },

    #[error("invalid Levi descriptor: {0}")]
    InvalidLevi(String),

    #[error("rank {rank} exceeds the configured matrix rank bound {bound}")]
    RankBound { rank: u32, bound: u32 },

    #[error("realization failed: {0}")]
    Realization(String),

    #[error("invalid Weyl group element: {0}")]
    InvalidElement(String),

    #[error("elements belong to different groups: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("invalid generator subset: {0}")]
    InvalidGenerators(String),

    #[error("L(w) is not in the parabolic category: {0}")]
    NotInParabolicBlock(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("denominator weight {weight} pairs to {pairing} >= 0 with theta")]
    NonNegativeDenominator { weight: String, pairing: String },

    #[error("negative coefficient {coefficient} at weight {weight}")]
    NegativeCoefficient { weight: String, coefficient: String },

    #[error("expected an integer, got {0}")]
    NonIntegral(String),

    #[error("inconsistent group data: {0}")]
    InvalidGroupData(String),

    #[error("character is infinite-dimensional")]
    InfiniteCharacter,

    #[error("weight dimension mismatch: expected {expected}, got {got}")]
    WeightDimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
