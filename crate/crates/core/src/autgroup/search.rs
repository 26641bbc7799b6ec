//! Automorphism group of a finite poset by individualisation and refinement.
//!
//! The search walks a reference path from the uniformly coloured root,
//! individualising the first element of the first smallest non-singleton
//! class until the colouring is discrete. Then, level by level from the
//! bottom, it looks for automorphisms sending the reference vertex to each
//! other member of that level's target cell, skipping members already in the
//! reference vertex's orbit under the generators found so far. The group
//! order is the product of those orbit lengths.

use std::collections::{HashSet, VecDeque};

use super::refine::{refine_counted, Coloring};
use crate::error::AutError;
use crate::poset::Poset;
use crate::util::UnionFind;

pub const DEFAULT_MAX_ELEMENTS: usize = 5_000;
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 10_000;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Largest poset the search accepts.
    pub max_elements: usize,
    /// Groups up to this order are listed element by element.
    pub enumeration_limit: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

/// A bijection on element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(Vec<u32>);

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    /// Wraps a map without checking it.
    pub fn from_map(map: Vec<usize>) -> Self {
        Self(map.into_iter().map(|x| x as u32).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_map(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Self(out)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes refined.
    pub nodes: u64,
    /// Refinement rounds that split at least one class.
    pub refinements: u64,
    /// Discrete leaves tested as candidate automorphisms.
    pub leaves: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutResult {
    pub order: u128,
    /// Generators found by the search, in discovery order.
    pub generators: Vec<Automorphism>,
    /// Every automorphism, sorted, when `order` is within the enumeration limit.
    pub automorphisms: Option<Vec<Automorphism>>,
    pub stats: SearchStats,
}

/// Automorphism group with the default limits.
pub fn automorphisms(p: &Poset) -> Result<AutResult, AutError> {
    automorphisms_with(p, &SearchConfig::default())
}

pub fn automorphisms_with(p: &Poset, cfg: &SearchConfig) -> Result<AutResult, AutError> {
    let n = p.len();
    if n > cfg.max_elements {
        return Err(AutError::TooLarge {
            size: n,
            cap: cfg.max_elements,
        });
    }
    let mut search = Search {
        p,
        stats: SearchStats::default(),
        ref_nodes: Vec::new(),
        ref_leaf: Vec::new(),
    };

    // Reference path.
    let mut node = search.refine(&Coloring::uniform(n));
    let mut levels: Vec<(usize, Vec<usize>)> = Vec::new();
    while let Some(cell) = node.target_cell() {
        let v = cell[0];
        search.ref_nodes.push(node.clone());
        levels.push((v, cell));
        node = search.refine(&node.individualize(v));
    }
    search.ref_leaf = node.colors().to_vec();
    search.ref_nodes.push(node);

    let mut generators = Vec::new();
    let mut orbits = UnionFind::new(n);
    let mut order: u128 = 1;
    for depth in (0..levels.len()).rev() {
        let (v, ref cell) = levels[depth];
        let mut failed: Vec<usize> = Vec::new();
        for &w in cell {
            if w == v || orbits.find(w) == orbits.find(v) {
                continue;
            }
            let root = orbits.find(w);
            if failed.iter().any(|&f| orbits.find(f) == root) {
                continue;
            }
            let start = search.ref_nodes[depth].individualize(w);
            match search.find_match(start, depth + 1) {
                Some(gamma) => {
                    for x in 0..n {
                        orbits.union(x, gamma.apply(x));
                    }
                    generators.push(gamma);
                }
                None => failed.push(w),
            }
        }
        order = order
            .checked_mul(orbits.class_size(v) as u128)
            .ok_or(AutError::OrderOverflow)?;
    }

    let automorphisms = (order <= cfg.enumeration_limit).then(|| {
        let all = close(n, &generators);
        debug_assert_eq!(all.len() as u128, order);
        all
    });
    Ok(AutResult {
        order,
        generators,
        automorphisms,
        stats: search.stats,
    })
}

struct Search<'a> {
    p: &'a Poset,
    stats: SearchStats,
    /// Equitable colourings along the reference path; the last is discrete.
    ref_nodes: Vec<Coloring>,
    ref_leaf: Vec<u32>,
}

impl Search<'_> {
    fn refine(&mut self, c: &Coloring) -> Coloring {
        let (out, rounds) = refine_counted(self.p, c);
        self.stats.nodes += 1;
        self.stats.refinements += rounds as u64;
        out
    }

    /// Depth-first search below an individualised colouring for a leaf
    /// equivalent to the reference leaf. `depth` indexes `ref_nodes`.
    fn find_match(&mut self, start: Coloring, depth: usize) -> Option<Automorphism> {
        let node = self.refine(&start);
        let reference = self.ref_nodes.get(depth)?;
        if node.trace() != reference.trace() || node.num_classes() != reference.num_classes() {
            return None;
        }
        if node.is_discrete() {
            self.stats.leaves += 1;
            return self.leaf_map(&node);
        }
        let cell = node.target_cell()?;
        for w in cell {
            let child = node.individualize(w);
            if let Some(g) = self.find_match(child, depth + 1) {
                return Some(g);
            }
        }
        None
    }

    /// The map sending each reference-leaf element to the element with the
    /// same colour, if it preserves covers.
    fn leaf_map(&self, leaf: &Coloring) -> Option<Automorphism> {
        let inv = invert(leaf.colors());
        let map: Vec<u32> = self
            .ref_leaf
            .iter()
            .map(|&c| inv[c as usize] as u32)
            .collect();
        let preserves = (0..self.p.len()).all(|x| {
            let up = self.p.upper_covers(x);
            let img_up = self.p.upper_covers(map[x] as usize);
            up.len() == img_up.len()
                && up
                    .iter()
                    .all(|&y| img_up.binary_search(&(map[y] as usize)).is_ok())
        });
        preserves.then_some(Automorphism(map))
    }
}

/// For a discrete colouring, the element holding each colour.
fn invert(colors: &[u32]) -> Vec<usize> {
    let mut inv = vec![0; colors.len()];
    for (x, &c) in colors.iter().enumerate() {
        inv[c as usize] = x;
    }
    inv
}

/// Every element of the group generated by `gens`, sorted.
fn close(n: usize, gens: &[Automorphism]) -> Vec<Automorphism> {
    let id = Automorphism::identity(n);
    let mut seen: HashSet<Automorphism> = HashSet::from([id.clone()]);
    let mut all = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let next = g.compose(&all[k]);
            if seen.insert(next.clone()) {
                queue.push_back(all.len());
                all.push(next);
            }
        }
    }
    all.sort_unstable();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::ElementTag;

    fn poset(n: usize, pairs: &[(usize, usize)]) -> Poset {
        let tags = (0..n).map(|i| ElementTag::Extra(i.to_string())).collect();
        Poset::from_covers(tags, pairs.iter().copied()).unwrap()
    }

    fn fence(n: usize) -> Poset {
        let mut pairs = Vec::new();
        for j in 0..n {
            pairs.push((2 * j, 2 * j + 1));
            if j + 1 < n {
                pairs.push((2 * j + 2, 2 * j + 1));
            }
        }
        poset(2 * n, &pairs)
    }

    #[test]
    fn fences_are_rigid() {
        for n in 1..8 {
            let r = automorphisms(&fence(n)).unwrap();
            assert_eq!(r.order, 1, "fence with {} elements", 2 * n);
            assert_eq!(r.automorphisms.unwrap().len(), 1);
        }
    }

    #[test]
    fn antichain_of_four() {
        let r = automorphisms(&poset(4, &[])).unwrap();
        assert_eq!(r.order, 24);
        let all = r.automorphisms.unwrap();
        assert_eq!(all.len(), 24);
        assert!(all[0].is_identity());
    }

    #[test]
    fn generators_only_above_limit() {
        let cfg = SearchConfig {
            max_elements: 100,
            enumeration_limit: 100,
        };
        let r = automorphisms_with(&poset(6, &[]), &cfg).unwrap();
        assert_eq!(r.order, 720);
        assert!(r.automorphisms.is_none());
        assert!(!r.generators.is_empty());
    }

    #[test]
    fn size_cap() {
        let cfg = SearchConfig {
            max_elements: 3,
            enumeration_limit: 10,
        };
        assert_eq!(
            automorphisms_with(&poset(4, &[]), &cfg),
            Err(AutError::TooLarge { size: 4, cap: 3 })
        );
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(automorphisms(&poset(0, &[])).unwrap().order, 1);
        assert_eq!(automorphisms(&poset(1, &[])).unwrap().order, 1);
    }

    #[test]
    fn two_crowns() {
        // Two disjoint copies of 0,1 < 2,3: order (2·2)·(2·2)·2.
        let r = automorphisms(&poset(
            8,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
            ],
        ))
        .unwrap();
        assert_eq!(r.order, 32);
        for a in r.automorphisms.unwrap() {
            assert!(poset(
                8,
                &[
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (4, 6),
                    (4, 7),
                    (5, 6),
                    (5, 7)
                ]
            )
            .is_automorphism(&a.to_map()));
        }
    }

    #[test]
    fn automorphism_ops() {
        let a = Automorphism::from_map(vec![1, 2, 0]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&a).to_map(), vec![2, 0, 1]);
    }
}
