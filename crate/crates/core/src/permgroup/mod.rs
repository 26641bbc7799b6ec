//! Permutations, permutation groups enumerated by closure, orbits and blocks.
//!
//! Groups here are desk scale: every element is listed. The element cap
//! ([`DEFAULT_ELEMENT_CAP`]) bounds the closure.

mod blocks;
mod perm;

use std::collections::{HashMap, VecDeque};

pub use blocks::{BlockAction, BlockPartition, RestrictionMap};
pub use perm::{parse_generators, Permutation, Point};

use crate::error::PermError;
use crate::util::{fmt_set, one_based, UnionFind};

pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// A permutation group with all of its elements enumerated.
///
/// `elements` is sorted by image list, so the identity comes first.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure of `generators` with the default element cap.
    pub fn closure(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::closure_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first product closure. Fails once more than `cap` elements
    /// have been found.
    pub fn closure_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, usize> = HashMap::new();
        let mut order = vec![id.clone()];
        seen.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &generators {
                let next = g.compose_unchecked(&order[k]);
                if seen.contains_key(&next) {
                    continue;
                }
                if order.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                seen.insert(next.clone(), order.len());
                queue.push_back(order.len());
                order.push(next);
            }
        }
        Ok(Self::from_element_set(degree, generators, order))
    }

    /// Assumes `elements` is already a group.
    pub(crate) fn from_element_set(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self {
            degree,
            generators,
            elements,
            lookup,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_element_set(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// Parses a comma-separated list of cycle-notation generators and closes it.
    pub fn from_cycle_strings(degree: usize, text: &str, cap: usize) -> Result<Self, PermError> {
        Self::closure_with_cap(degree, parse_generators(degree, text)?, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    fn generating_set(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup.contains_key(p)
    }

    /// Position of `p` in [`elements`](Self::elements).
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    /// Orbits sorted by least element, each sorted.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut uf = UnionFind::new(self.degree);
        for g in self.generating_set() {
            for x in 0..self.degree {
                uf.union(x, g.apply(x as Point) as usize);
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x as Point).collect())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// True iff every element maps `set` either onto itself or off it entirely.
    pub fn is_block(&self, set: &[Point]) -> bool {
        self.block_witness(set).is_none()
    }

    /// An element `σ` with `σ[set] ∩ set ≠ ∅` and `σ[set] ≠ set`, if one exists.
    pub fn block_witness(&self, set: &[Point]) -> Option<&Permutation> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut member = vec![false; self.degree];
        for &x in &sorted {
            member[x as usize] = true;
        }
        self.elements.iter().find(|s| {
            let hits = sorted
                .iter()
                .filter(|&&x| member[s.apply(x) as usize])
                .count();
            hits > 0 && hits < sorted.len()
        })
    }

    /// The smallest block containing `seed`.
    ///
    /// Merges images of related pairs under the generators until the
    /// relation is invariant; the class of the seed is then a block.
    pub fn minimal_block(&self, seed: &[Point]) -> Result<Vec<Point>, PermError> {
        let first = *seed.first().ok_or(PermError::EmptySet)?;
        for &x in seed {
            if x as usize >= self.degree {
                return Err(PermError::PointOutOfRange {
                    point: x + 1,
                    degree: self.degree,
                });
            }
        }
        let orbits = self.orbits();
        let orbit_of = orbit_lookup(&orbits, self.degree);
        if seed
            .iter()
            .any(|&x| orbit_of[x as usize] != orbit_of[first as usize])
        {
            let mut set = seed.to_vec();
            set.sort_unstable();
            return Err(PermError::SpansOrbits {
                set: one_based(&set),
            });
        }

        let mut uf = UnionFind::new(self.degree);
        let mut pending = Vec::new();
        for &x in &seed[1..] {
            if uf.union(first as usize, x as usize) {
                pending.push((first, x));
            }
        }
        while let Some((a, b)) = pending.pop() {
            for g in self.generating_set() {
                let (ga, gb) = (g.apply(a), g.apply(b));
                if uf.union(ga as usize, gb as usize) {
                    pending.push((ga, gb));
                }
            }
        }
        let root = uf.find(first as usize);
        Ok((0..self.degree as Point)
            .filter(|&x| uf.find(x as usize) == root)
            .collect())
    }

    /// The block partition generated by an orbit cut, after checking that
    /// each cut set is a block and the sets meet every orbit exactly once.
    pub fn validate_orbit_cut(&self, cut: &[Vec<Point>]) -> Result<BlockPartition, PermError> {
        let orbits = self.orbits();
        let orbit_of = orbit_lookup(&orbits, self.degree);
        let mut chosen: Vec<Option<Vec<Point>>> = vec![None; orbits.len()];
        for set in cut {
            let mut set = set.clone();
            set.sort_unstable();
            set.dedup();
            let first = *set.first().ok_or(PermError::EmptySet)?;
            if let Some(&bad) = set.iter().find(|&&x| x as usize >= self.degree) {
                return Err(PermError::PointOutOfRange {
                    point: bad + 1,
                    degree: self.degree,
                });
            }
            let o = orbit_of[first as usize];
            if set.iter().any(|&x| orbit_of[x as usize] != o) {
                return Err(PermError::SpansOrbits {
                    set: one_based(&set),
                });
            }
            if chosen[o].is_some() {
                return Err(PermError::CutDuplicateOrbit {
                    orbit: one_based(&orbits[o]),
                });
            }
            if let Some(w) = self.block_witness(&set) {
                return Err(PermError::NotABlock {
                    set: fmt_set(&set),
                    witness: w.to_string(),
                    image: fmt_set(&w.image_of_set(&set)),
                });
            }
            chosen[o] = Some(set);
        }
        let mut orbit_cut = Vec::with_capacity(orbits.len());
        for (o, c) in chosen.into_iter().enumerate() {
            match c {
                Some(set) => orbit_cut.push(set),
                None => {
                    return Err(PermError::CutMissingOrbit {
                        orbit: one_based(&orbits[o]),
                    })
                }
            }
        }
        Ok(BlockPartition::generate(self, orbit_cut))
    }

    /// Whole orbits as the cut.
    pub fn trivial_cut(&self) -> Vec<Vec<Point>> {
        self.orbits()
    }

    /// The least point of each orbit as the cut.
    pub fn singleton_cut(&self) -> Vec<Vec<Point>> {
        self.orbits().into_iter().map(|o| vec![o[0]]).collect()
    }
}

fn orbit_lookup(orbits: &[Vec<Point>], degree: usize) -> Vec<usize> {
    let mut orbit_of = vec![0; degree];
    for (k, o) in orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x as usize] = k;
        }
    }
    orbit_of
}
