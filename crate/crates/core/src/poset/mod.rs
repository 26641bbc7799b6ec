//! Finite ordered sets.
//!
//! A [`Poset`] is built from any acyclic set of generating pairs; it keeps
//! the transitive closure as a dense bit relation and the cover relation
//! (transitive reduction) as adjacency lists. Nothing here knows about the
//! construction, so the automorphism search can rely on it alone.

mod bits;
mod dot;
mod tag;

use std::collections::HashMap;

pub(crate) use bits::BitMatrix;
pub use tag::ElementTag;

use crate::error::PosetError;

#[derive(Clone, Debug)]
pub struct Poset {
    tags: Vec<ElementTag>,
    index: HashMap<ElementTag, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// `above.get(x, y)` iff `x < y`.
    above: BitMatrix,
    /// `below.get(y, x)` iff `x < y`.
    below: BitMatrix,
    rank: Vec<usize>,
}

/// Outcome of [`Poset::lattice_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeCheck {
    Lattice,
    NoJoin(usize, usize),
    NoMeet(usize, usize),
}

impl LatticeCheck {
    pub fn holds(self) -> bool {
        self == LatticeCheck::Lattice
    }
}

impl Poset {
    /// Builds the order generated by `pairs` (each `(lo, hi)` meaning
    /// `lo < hi`). Redundant pairs are dropped from the cover relation;
    /// element indices follow the order of `tags`.
    pub fn from_covers<I>(tags: Vec<ElementTag>, pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = tags.len();
        let mut index = HashMap::with_capacity(n);
        for (i, t) in tags.iter().enumerate() {
            if index.insert(t.clone(), i).is_some() {
                return Err(PosetError::DuplicateTag(t.to_string()));
            }
        }
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (lo, hi) in pairs {
            for i in [lo, hi] {
                if i >= n {
                    return Err(PosetError::IndexOutOfRange { index: i, len: n });
                }
            }
            if lo == hi {
                return Err(PosetError::Cycle(vec![lo]));
            }
            succ[lo].push(hi);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        let topo = topological_order(&succ)?;
        let mut above = BitMatrix::new(n);
        for &x in topo.iter().rev() {
            for &y in &succ[x] {
                above.set(x, y);
                above.union_row_into(y, x);
            }
        }

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for x in 0..n {
            for &y in &succ[x] {
                let implied = succ[x].iter().any(|&z| z != y && above.get(z, y));
                if !implied {
                    up[x].push(y);
                    down[y].push(x);
                }
            }
        }
        for d in &mut down {
            d.sort_unstable();
        }

        let mut rank = vec![0; n];
        for &x in &topo {
            rank[x] = down[x].iter().map(|&y| rank[y] + 1).max().unwrap_or(0);
        }
        let below = above.transpose();
        Ok(Self {
            tags,
            index,
            up,
            down,
            above,
            below,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn tags(&self) -> &[ElementTag] {
        &self.tags
    }

    pub fn tag(&self, x: usize) -> &ElementTag {
        &self.tags[x]
    }

    pub fn index_of(&self, tag: &ElementTag) -> Option<usize> {
        self.index.get(tag).copied()
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above.get(x, y)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above.get(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// Elements strictly above `x`, ascending by index.
    pub fn strictly_above(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.above.iter_row(x)
    }

    /// Elements strictly below `x`, ascending by index.
    pub fn strictly_below(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.below.iter_row(x)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn num_covers(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// Length of the longest chain from `x` down to a minimal element.
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &x)| set[k + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    /// True iff `map` is a bijection with `x ≤ y ⟺ map[x] ≤ map[y]`.
    /// Checks every pair.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.len();
        if map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in map {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        (0..n).all(|x| (0..n).all(|y| self.lt(x, y) == self.lt(map[x], map[y])))
    }

    /// Checks that each pair of elements has a join and a meet, returning
    /// the first pair (in index order) that lacks one.
    pub fn lattice_check(&self) -> LatticeCheck {
        let n = self.len();
        let words = self.above.words_per_row();
        let mut bounds = vec![0u64; words];
        for x in 0..n {
            for y in x + 1..n {
                if self.comparable(x, y) {
                    continue;
                }
                if !self.has_least_common(&self.above, x, y, &mut bounds, false) {
                    return LatticeCheck::NoJoin(x, y);
                }
                if !self.has_least_common(&self.below, x, y, &mut bounds, true) {
                    return LatticeCheck::NoMeet(x, y);
                }
            }
        }
        LatticeCheck::Lattice
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_check().holds()
    }

    /// Whether the common bounds of `x` and `y` in direction `rel` have a
    /// least element (greatest, for `rel = below`).
    fn has_least_common(
        &self,
        rel: &BitMatrix,
        x: usize,
        y: usize,
        bounds: &mut [u64],
        downward: bool,
    ) -> bool {
        for ((b, &rx), &ry) in bounds.iter_mut().zip(rel.row(x)).zip(rel.row(y)) {
            *b = rx & ry;
        }
        // x, y incomparable, so neither is itself a common bound.
        let mut best: Option<usize> = None;
        let mut tied = false;
        for z in iter_bits(bounds) {
            let better = match best {
                None => true,
                Some(b) => {
                    if downward {
                        self.rank[z] > self.rank[b]
                    } else {
                        self.rank[z] < self.rank[b]
                    }
                }
            };
            if better {
                best = Some(z);
                tied = false;
            } else if best.is_some_and(|b| self.rank[z] == self.rank[b]) {
                tied = true;
            }
        }
        let Some(z) = best else { return false };
        if tied {
            return false;
        }
        let zrow = rel.row(z);
        bounds.iter().zip(zrow).enumerate().all(|(k, (&b, &r))| {
            let own = if z / 64 == k { 1u64 << (z % 64) } else { 0 };
            b & !(r | own) == 0
        })
    }

    /// Graphviz rendering of the cover relation; see [`dot`].
    pub fn to_dot(&self) -> String {
        dot::render(self)
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(k * 64 + bit)
        })
    })
}

/// Kahn's algorithm; on failure reports one directed cycle.
fn topological_order(succ: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &y in s {
            indeg[y] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                order.push(y);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover element has a leftover successor; walk until a repeat.
    let mut pos = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut x = (0..n).find(|&x| indeg[x] > 0).expect("leftover element");
    loop {
        if pos[x] != usize::MAX {
            return Err(PosetError::Cycle(path[pos[x]..].to_vec()));
        }
        pos[x] = path.len();
        path.push(x);
        x = *succ[x]
            .iter()
            .find(|&&y| indeg[y] > 0)
            .expect("leftover element has a leftover successor");
    }
}
