use crate::root_system::CartanType;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{family}{rank} is not a valid irreducible Cartan type")]
    InvalidCartanType { family: char, rank: usize },
    #[error("cannot parse Cartan type {0:?} (expected e.g. A2, B3, G2)")]
    ParseCartanType(String),
    #[error("simple root index {index} out of range 1..={rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },
    #[error("generator index {index} out of range 0..={rank}")]
    GeneratorIndexOutOfRange { index: usize, rank: usize },
    #[error("cannot parse index list {0:?}")]
    ParseIndexList(String),
    #[error("elements belong to different root systems ({left} and {right})")]
    MixedRootSystems { left: CartanType, right: CartanType },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("{0:?} is not a positive root")]
    NotPositive(Vec<i64>),
    #[error("vector has {got} coordinates, root system has rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("negative roots need a positive delta coefficient")]
    InvalidAffineRoot,
    #[error("point lies on the hyperplane H({root:?}, {level})")]
    OnHyperplane { root: Vec<i64>, level: i64 },
    #[error("simple root subsets {delta1} and {delta2} are not orthogonal")]
    NotOrthogonal { delta1: String, delta2: String },
    #[error("enumeration budget of {budget} elements exceeded at length {length}")]
    BudgetExceeded { budget: usize, length: usize },
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error("alcove rendering needs a rank-2 root system, got {0}")]
    RankNotTwo(CartanType),
    #[error("window radius must be positive")]
    NonPositiveRadius,
    #[error("bad config file {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
