use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero element {zero} is not below element {missing}")]
    MissingMinimum { zero: usize, missing: usize },

    #[error("relation is not transitive: {0} < {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),

    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("elements {0} and {1} are distinct but equivalent under the reflexive order")]
    NotAntisymmetric(usize, usize),

    #[error("structure is not a generalized Boolean algebra")]
    NotGba,

    #[error("structure is not a lattice under its reflexive order")]
    NotLattice,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("subset {0} is not a filter")]
    NotAFilter(String),

    #[error("family member {0} is not open")]
    NotOpen(usize),

    #[error("family does not contain the empty set")]
    MissingEmptySet,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("relation is not an interpolator")]
    NotInterpolator,

    #[error("image of point {0} is not an ultrafilter")]
    NotUltrafilter(usize),

    #[error("map is not continuous: preimage of open {0} is not open")]
    NotContinuous(String),

    #[error("map sends zero to {0}, not to the target's zero")]
    ZeroNotPreserved(usize),

    #[error("map is not tightish")]
    NotTightish,

    #[error("factoring construction incomplete: {0}")]
    ConstructionIncomplete(String),

    #[error("family is not a pseudobasis")]
    NotPseudobasis,

    #[error("family member {0} is not clopen")]
    NotClopen(usize),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
