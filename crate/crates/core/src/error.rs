use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("weights must be coprime as a tuple, got gcd {0}")]
    GcdNotOne(i64),
    #[error("embedding degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("generator points must have nonnegative coordinates")]
    NegativeCoordinate,
    #[error("duplicate point in generator set")]
    DuplicatePoint,
    #[error("generator set must contain at least one point")]
    EmptySet,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a homogeneous generator set")]
    InhomogeneousSet,
    #[error("points file lists points that disagree with its weights/degree")]
    SpecMismatch,
    #[error("{got} vertices exceed the supported cap of {cap}")]
    TooManyVertices { got: usize, cap: usize },
    #[error("the void complex has no boundary matrices")]
    VoidComplex,
    #[error("degree box holds {cells} cells, over the budget of {budget}")]
    BoxTooLarge { cells: u128, budget: u128 },
    #[error("generator set spans rank {rank} inside ambient dimension {dim}")]
    NotSpanning { rank: usize, dim: usize },
    #[error("no coordinate of b equals the matching coordinate of t")]
    HypothesisNotMet,
    #[error("generator set does not generate a cone containing the positive orthant")]
    ConeConditionFailed,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),
    #[error("table does not carry the data needed for this query")]
    IncompleteTable,
}

pub type Result<T> = std::result::Result<T, Error>;
