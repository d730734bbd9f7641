//! Error types shared across the crate.

use crate::subset::Subset;
use thiserror::Error;

/// Rank-table axiom violations, each carrying a witness where one exists.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ValidationError {
    #[error("rank table has {got} entries, expected {expected}")]
    WrongTableLength { expected: usize, got: usize },
    #[error("rank table has a negative entry at subset {subset:?}")]
    NegativeEntry { subset: Subset },
    #[error("rank of the empty set is nonzero")]
    Normalization,
    #[error("rank decreases from {smaller:?} to {larger:?}")]
    Monotonicity { smaller: Subset, larger: Subset },
    #[error("submodularity fails on the pair ({s1:?}, {s2:?})")]
    Submodularity { s1: Subset, s2: Subset },
    #[error("rank of element {element} exceeds its type bound")]
    TypeBound { element: usize },
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum CoreError {
    #[error("ground set must have at least one element")]
    EmptyGround,
    #[error("ground set of size {m} exceeds the configured cap {cap}")]
    GroundTooLarge { m: usize, cap: usize },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("operands live on different ground data")]
    GroundMismatch,
    #[error("element {element} is not in the ground set")]
    UnknownElement { element: usize },
    #[error("subset argument must be nonempty")]
    EmptySubset,
    #[error("set at position {position} in the sequence is empty")]
    EmptySetInSequence { position: usize },
    #[error("sequence has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("cannot lower the dimension of a zero-dimensional class")]
    DimensionUnderflow,
    #[error("term list must be nonempty")]
    EmptyCombination,
    #[error("classes of different dimensions cannot be combined")]
    MixedDimensions,
    #[error("split value {got} is outside the feasible range [{low}, {high}]")]
    SplitOutOfRange { low: u32, high: u32, got: u32 },
    #[error("operation requires a loopless polymatroid")]
    LoopyPolymatroid,
    #[error("fan is not pure-dimensional")]
    NotPure,
    #[error("point list must be nonempty")]
    EmptyPointSet,
    #[error("matrix rows are linearly dependent")]
    RankDeficientRows,
    #[error("random generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
    #[error("{subset:?} is not a flat")]
    FlatExpected { subset: Subset },
    #[error("lifted ground set is empty")]
    EmptyLiftedGround,
}
