//! Ordered sets whose automorphism group, restricted to a distinguished
//! antichain of maximal elements, is a prescribed permutation group.
//!
//! The crate has four layers:
//!
//! * [`permgroup`]: permutations, enumerated groups, orbits, blocks and
//!   block partitions;
//! * [`poset`]: generic finite ordered sets (closure, covers, rank, lattice
//!   test, DOT export);
//! * [`construct`]: the ordered set built from a group and a block
//!   partition, its predicted size, a structural audit and the lattice
//!   extension;
//! * [`autgroup`]: a generic poset automorphism search (colour refinement
//!   plus individualisation) and the check that restriction to the top
//!   layer is an isomorphism onto the group.

pub mod autgroup;
pub mod construct;
pub mod error;
pub mod permgroup;
pub mod poset;
mod util;

pub use error::{Error, Result};
pub use permgroup::{BlockPartition, PermGroup, Permutation, Point, RestrictionMap};
pub use poset::{ElementTag, LatticeCheck, Poset};
