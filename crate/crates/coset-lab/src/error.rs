use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be p^mu with p an odd prime and mu >= 1 (got p={p}, mu={mu})")]
    BadRing { p: u64, mu: u32 },
    #[error("operands live in different rings")]
    MixedContext,
    #[error("element is not a unit")]
    NotUnit,
    #[error("level {0} out of range")]
    BadLevel(u32),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("ambient ranks differ")]
    RankMismatch,
    #[error("kernel inclusion fails, no factorization")]
    NoFactor,
    #[error("object labels do not chain")]
    ObjectMismatch,
    #[error("bad block sizes: {0}")]
    BadSizes(String),
    #[error("search space {size} exceeds cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("matrix product is not nilpotent")]
    NotNilpotent,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("closure exceeded cap {cap}")]
    CapExceeded { cap: usize },
    #[error("closure is incomplete")]
    IncompleteClosure,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("character is nontrivial on the bullet subgroup")]
    NotBulletTrivial,
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Process exit code: 1 domain, 2 resource, 3 malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SearchSpaceTooLarge { .. } | Error::CapExceeded { .. } | Error::IncompleteClosure => 2,
            Error::Malformed(_) | Error::BadRing { .. } => 3,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadRing { .. } => "BadRing",
            Error::MixedContext => "MixedContext",
            Error::NotUnit => "NotUnit",
            Error::BadLevel(_) => "BadLevel",
            Error::DimMismatch(_) => "DimMismatch",
            Error::NotSquare => "NotSquare",
            Error::NotInvertible => "NotInvertible",
            Error::NoSolution => "NoSolution",
            Error::RankMismatch => "RankMismatch",
            Error::NoFactor => "NoFactor",
            Error::ObjectMismatch => "ObjectMismatch",
            Error::BadSizes(_) => "BadSizes",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotIdempotent => "NotIdempotent",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::IncompleteClosure => "IncompleteClosure",
            Error::NotACharacter(_) => "NotACharacter",
            Error::NotBulletTrivial => "NotBulletTrivial",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
