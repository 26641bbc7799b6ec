//! Poset automorphism groups, and the check that a construction's
//! automorphisms restrict to exactly its group on the top layer.

mod refine;
mod search;
mod verify;

pub use refine::{refine, Coloring};
pub use search::{
    automorphisms, automorphisms_with, AutResult, Automorphism, SearchConfig, SearchStats,
    DEFAULT_ENUMERATION_LIMIT, DEFAULT_MAX_ELEMENTS,
};
pub use verify::{
    assess, induced_automorphism, restrict_to_t, verify_theorem, verify_theorem_with, Verdict,
    VerifyReport,
};
