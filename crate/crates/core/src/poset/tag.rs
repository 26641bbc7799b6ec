use std::fmt;

use crate::permgroup::{Permutation, Point, RestrictionMap};

/// The role of a poset element.
///
/// The derived order (variant first, then contents) is the element order
/// used by the construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementTag {
    /// `ℓ_j`, lower fence point.
    FenceLower(Point),
    /// `u_j`, upper fence point.
    FenceUpper(Point),
    GroupElem(Permutation),
    /// `(j, μ)` with `j` in the domain of `μ`.
    DPoint(Point, RestrictionMap),
    /// A point of the permuted domain.
    TPoint(Point),
    Extra(String),
}

impl fmt::Display for ElementTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementTag::FenceLower(j) => write!(f, "l{}", j + 1),
            ElementTag::FenceUpper(j) => write!(f, "u{}", j + 1),
            ElementTag::GroupElem(p) if p.is_identity() => f.write_str("id"),
            ElementTag::GroupElem(p) => write!(f, "{p}"),
            ElementTag::DPoint(j, mu) => write!(f, "({}, {mu})", j + 1),
            ElementTag::TPoint(j) => write!(f, "t{}", j + 1),
            ElementTag::Extra(name) => f.write_str(name),
        }
    }
}
