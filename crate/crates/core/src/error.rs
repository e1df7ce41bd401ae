use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got l = {0}")]
    InvalidRank(usize),
    #[error("matrix size mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("element is not fixed by the involution: {0}")]
    NotInFixedSubalgebra(String),
    #[error("element is not traceless")]
    NotTraceless,
    #[error("element is not of weight zero for the Cartan subalgebra")]
    NotWeightZero,
    #[error("state depth {depth} exceeds the cap {cap}")]
    DepthCap { depth: u32, cap: u32 },
    #[error("isotropic root has no coroot")]
    IsotropicRoot,
    #[error("weight dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subset element {0} out of range 1..={1}")]
    SubsetOutOfRange(usize, usize),
    #[error("polynomial arity {got} does not match weight arity {expected}")]
    ArityMismatch { got: usize, expected: usize },
    #[error("polynomial is not a product of a variable and an affine-linear form: {0}")]
    NotFactored(String),
    #[error("branch system has no unique solution: {0}")]
    DegenerateBranch(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
