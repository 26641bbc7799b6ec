use std::collections::BTreeSet;
use std::fmt;

use super::{PermGroup, Permutation, Point};
use crate::error::PermError;
use crate::util::fmt_set;

/// The restriction `θ|_B` of a group element to a block.
///
/// Equality is by value: two group elements with the same restriction give
/// the same map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RestrictionMap {
    domain: Vec<Point>,
    images: Vec<Point>,
}

impl RestrictionMap {
    /// `domain` must be sorted.
    pub fn of(theta: &Permutation, domain: &[Point]) -> Self {
        Self {
            domain: domain.to_vec(),
            images: domain.iter().map(|&x| theta.apply(x)).collect(),
        }
    }

    /// Builds a map from parallel lists; the pairs are re-sorted by domain point.
    pub fn from_pairs(domain: &[Point], images: &[Point]) -> Self {
        let mut pairs: Vec<(Point, Point)> =
            domain.iter().copied().zip(images.iter().copied()).collect();
        pairs.sort_unstable();
        Self {
            domain: pairs.iter().map(|p| p.0).collect(),
            images: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn domain(&self) -> &[Point] {
        &self.domain
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn apply(&self, x: Point) -> Option<Point> {
        self.domain.binary_search(&x).ok().map(|k| self.images[k])
    }

    /// Sorted image set.
    pub fn range(&self) -> Vec<Point> {
        let mut r = self.images.clone();
        r.sort_unstable();
        r
    }

    /// `σμ`: same domain, images pushed through `sigma`.
    pub fn after(&self, sigma: &Permutation) -> Self {
        Self {
            domain: self.domain.clone(),
            images: self.images.iter().map(|&y| sigma.apply(y)).collect(),
        }
    }
}

impl fmt::Display for RestrictionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (x, y)) in self.domain.iter().zip(&self.images).enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", x + 1, y + 1)?;
        }
        f.write_str("]")
    }
}

/// A block partition generated from an orbit cut.
///
/// `blocks` is ordered by least element; `orbit_cut[j]` is the
/// representative of the `j`-th orbit (orbits ordered by least element)
/// and `m[j]` the number of its images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub orbit_cut: Vec<Vec<Point>>,
    pub blocks: Vec<Vec<Point>>,
    pub m: Vec<usize>,
    pub block_of: Vec<usize>,
    /// Index into `orbit_cut` of the cut block each block is an image of.
    pub cut_index: Vec<usize>,
}

impl BlockPartition {
    pub(crate) fn generate(g: &PermGroup, orbit_cut: Vec<Vec<Point>>) -> Self {
        let mut tagged: Vec<(Vec<Point>, usize)> = Vec::new();
        let mut m = Vec::with_capacity(orbit_cut.len());
        for (j, b) in orbit_cut.iter().enumerate() {
            let images: BTreeSet<Vec<Point>> =
                g.elements().iter().map(|s| s.image_of_set(b)).collect();
            m.push(images.len());
            tagged.extend(images.into_iter().map(|img| (img, j)));
        }
        tagged.sort_unstable();
        let mut block_of = vec![usize::MAX; g.degree()];
        for (k, (b, _)) in tagged.iter().enumerate() {
            for &x in b {
                debug_assert_eq!(
                    block_of[x as usize],
                    usize::MAX,
                    "images of cut blocks overlap"
                );
                block_of[x as usize] = k;
            }
        }
        debug_assert!(block_of.iter().all(|&k| k != usize::MAX));
        let (blocks, cut_index) = tagged.into_iter().unzip();
        Self {
            orbit_cut,
            blocks,
            m,
            block_of,
            cut_index,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block equal to `set`.
    pub fn position(&self, set: &[Point]) -> Option<usize> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let &first = sorted.first()?;
        let k = *self.block_of.get(first as usize)?;
        (self.blocks[k] == sorted).then_some(k)
    }

    /// `G|_B`: the distinct restrictions of group elements to block `set`.
    pub fn restrictions(
        &self,
        g: &PermGroup,
        set: &[Point],
    ) -> Result<Vec<RestrictionMap>, PermError> {
        let k = self
            .position(set)
            .ok_or_else(|| PermError::UnknownBlock(fmt_set(set)))?;
        Ok(restrictions_to(g, &self.blocks[k]))
    }

    /// The permutation group induced on block indices, with the order of its
    /// kernel (elements fixing every block setwise).
    pub fn block_action(&self, g: &PermGroup) -> BlockAction {
        let induced = |s: &Permutation| -> Permutation {
            let images = self
                .blocks
                .iter()
                .map(|b| self.block_of[s.apply(b[0]) as usize] as Point)
                .collect();
            Permutation::from_images(images).expect("group elements permute blocks")
        };
        let mut kernel_order = 0;
        let mut elements = Vec::with_capacity(g.order());
        for s in g.elements() {
            let p = induced(s);
            if p.is_identity() {
                kernel_order += 1;
            }
            elements.push(p);
        }
        let generators = g.generators().iter().map(induced).collect();
        BlockAction {
            group: PermGroup::from_element_set(self.num_blocks(), generators, elements),
            kernel_order,
        }
    }
}

/// `G⟲𝓑` together with `|N|`.
#[derive(Clone, Debug)]
pub struct BlockAction {
    pub group: PermGroup,
    pub kernel_order: usize,
}

impl BlockAction {
    pub fn is_transitive(&self) -> bool {
        self.group.is_transitive()
    }
}

fn restrictions_to(g: &PermGroup, domain: &[Point]) -> Vec<RestrictionMap> {
    let set: BTreeSet<RestrictionMap> = g
        .elements()
        .iter()
        .map(|s| RestrictionMap::of(s, domain))
        .collect();
    set.into_iter().collect()
}

impl PermGroup {
    /// All distinct restrictions `θ|_set`, sorted. `set` must be sorted.
    pub fn restrictions_to(&self, set: &[Point]) -> Vec<RestrictionMap> {
        restrictions_to(self, set)
    }

    /// `G⟲B`: restrictions of the elements stabilising `set` setwise. Its
    /// length is the order of that group.
    pub fn setwise_action(&self, set: &[Point]) -> Vec<RestrictionMap> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let set: BTreeSet<RestrictionMap> = self
            .elements()
            .iter()
            .filter(|s| s.image_of_set(&sorted) == sorted)
            .map(|s| RestrictionMap::of(s, &sorted))
            .collect();
        set.into_iter().collect()
    }
}
