use thiserror::Error;

/// Errors from permutation and permutation-group operations.
///
/// Points inside messages are 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list {0:?} is not a bijection")]
    NotABijection(Vec<u32>),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("point {0} appears in more than one cycle")]
    CyclesNotDisjoint(u32),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("point-set must be nonempty")]
    EmptySet,
    #[error("set {set:?} meets more than one orbit")]
    SpansOrbits { set: Vec<u32> },
    #[error("{set} is not a block: {witness} maps it to {image}")]
    NotABlock {
        set: String,
        witness: String,
        image: String,
    },
    #[error("orbit cut has no set inside the orbit {orbit:?}")]
    CutMissingOrbit { orbit: Vec<u32> },
    #[error("orbit cut has more than one set inside the orbit {orbit:?}")]
    CutDuplicateOrbit { orbit: Vec<u32> },
    #[error("{0} is not a block of the partition")]
    UnknownBlock(String),
    #[error("family parameter k = {0} is outside 2..=20")]
    FamilyParameter(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("element index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("order relation has a cycle through elements {0:?}")]
    Cycle(Vec<usize>),
    #[error("duplicate element tag {0}")]
    DuplicateTag(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("poset has {size} elements, above the search cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("automorphism group order overflows u128")]
    OrderOverflow,
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("automorphism does not preserve the top layer")]
    TopLayerNotPreserved,
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
}

/// Crate-level error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

impl Error {
    /// True when the failure is a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::Perm(PermError::CapExceeded { .. })
                | Error::Aut(AutError::TooLarge { .. })
                | Error::Aut(AutError::OrderOverflow)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
