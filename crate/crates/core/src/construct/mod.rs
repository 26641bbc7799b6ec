//! The ordered set `U` built from a permutation group and a block partition.
//!
//! Elements, bottom to top:
//!
//! * a fence `ℓ_1 < u_1 > ℓ_2 < u_2 > … > ℓ_n < u_n`;
//! * one element per group element `θ`;
//! * for every block `B` and every distinct restriction `μ = θ|_B`, the
//!   points `(j, μ)` for `j ∈ B`, with `u_j < (j, μ) < μ(j)`;
//! * the points `1..n` themselves (the top layer `T`).
//!
//! Each `θ` lies below every `(j, θ|_B)`. The builder emits these generating
//! pairs and leaves transitivity to [`Poset::from_covers`].

mod audit;
mod family;
mod size;

use std::collections::{BTreeMap, HashMap};

pub use audit::{structural_audit, AuditFailure, AuditReport};
pub use family::{
    cyclic_wreath_closed_form, family_gk, sweep_row, SweepOptions, SweepRow, SweepSource,
};
pub use size::{predicted_size, OrbitTerm, SizeReport, TransitiveIdentity};

use crate::error::Result;
use crate::permgroup::{BlockPartition, PermGroup, Point, RestrictionMap};
use crate::poset::{ElementTag, Poset};

/// The points `(j, μ)` sharing one restriction `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGroup {
    pub mu: RestrictionMap,
    /// Element indices, aligned with `mu.domain()`.
    pub points: Vec<usize>,
}

/// Element indices of each layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Layers {
    /// `ℓ_j`, indexed by point.
    pub fence_lower: Vec<usize>,
    /// `u_j`, indexed by point.
    pub fence_upper: Vec<usize>,
    /// Aligned with `group.elements()`.
    pub group: Vec<usize>,
    /// Sorted by `mu`.
    pub d_groups: Vec<DGroup>,
    /// Indexed by point.
    pub top: Vec<usize>,
    /// Bottom, top and centre of the lattice extension, when present.
    pub extras: Vec<usize>,
}

impl Layers {
    pub fn fence(&self) -> impl Iterator<Item = usize> + '_ {
        self.fence_lower.iter().chain(&self.fence_upper).copied()
    }

    pub fn d_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.d_groups.iter().flat_map(|d| d.points.iter().copied())
    }

    pub fn d_count(&self) -> usize {
        self.d_groups.iter().map(|d| d.points.len()).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub group: PermGroup,
    pub partition: BlockPartition,
    pub poset: Poset,
    pub layers: Layers,
}

impl Construction {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Index of `(j, μ)`.
    pub fn d_point(&self, j: Point, mu: &RestrictionMap) -> Option<usize> {
        let k = self
            .layers
            .d_groups
            .binary_search_by(|d| d.mu.cmp(mu))
            .ok()?;
        let d = &self.layers.d_groups[k];
        d.mu.domain().binary_search(&j).ok().map(|i| d.points[i])
    }

    /// Size prediction with the actual element count filled in.
    pub fn size_report(&self) -> SizeReport {
        let mut r = predicted_size(&self.group, &self.partition);
        r.set_actual(self.layers_len());
        r
    }

    /// Element count without the lattice-extension extras.
    fn layers_len(&self) -> usize {
        self.len() - self.layers.extras.len()
    }
}

/// Builds `U` for a group and a validated block partition of it.
pub fn build_u(g: &PermGroup, bp: &BlockPartition) -> Result<Construction> {
    let n = g.degree();
    let mut tags: Vec<ElementTag> = Vec::new();
    tags.extend((0..n as Point).map(ElementTag::FenceLower));
    tags.extend((0..n as Point).map(ElementTag::FenceUpper));
    tags.extend(g.elements().iter().cloned().map(ElementTag::GroupElem));

    let mut d_tags = Vec::new();
    for block in &bp.blocks {
        for mu in g.restrictions_to(block) {
            for &j in mu.domain() {
                d_tags.push(ElementTag::DPoint(j, mu.clone()));
            }
        }
    }
    d_tags.sort_unstable();
    tags.extend(d_tags);
    tags.extend((0..n as Point).map(ElementTag::TPoint));

    let index: HashMap<&ElementTag, usize> = tags.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let lower = |j: usize| j;
    let upper = |j: usize| n + j;
    let group_base = 2 * n;
    let top = |j: Point| tags.len() - n + j as usize;

    let mut pairs = Vec::new();
    for j in 0..n {
        pairs.push((lower(j), upper(j)));
        if j + 1 < n {
            pairs.push((lower(j + 1), upper(j)));
        }
    }

    let mut d_groups: BTreeMap<RestrictionMap, Vec<usize>> = BTreeMap::new();
    for (i, t) in tags.iter().enumerate() {
        if let ElementTag::DPoint(j, mu) = t {
            let image = mu.apply(*j).expect("j in domain");
            pairs.push((upper(*j as usize), i));
            pairs.push((i, top(image)));
            d_groups.entry(mu.clone()).or_default().push(i);
        }
    }

    for (k, theta) in g.elements().iter().enumerate() {
        for block in &bp.blocks {
            let mu = RestrictionMap::of(theta, block);
            for &j in block {
                let d = index[&ElementTag::DPoint(j, mu.clone())];
                pairs.push((group_base + k, d));
            }
        }
    }

    let mut d_groups: Vec<DGroup> = d_groups
        .into_iter()
        .map(|(mu, mut points)| {
            // DPoint tags sort by point first, so indices follow the domain order.
            points.sort_unstable();
            DGroup { mu, points }
        })
        .collect();
    d_groups.sort_by(|a, b| a.mu.cmp(&b.mu));

    let layers = Layers {
        fence_lower: (0..n).map(lower).collect(),
        fence_upper: (0..n).map(upper).collect(),
        group: (0..g.order()).map(|k| group_base + k).collect(),
        d_groups,
        top: (0..n as Point).map(top).collect(),
        extras: Vec::new(),
    };
    drop(index);
    let poset = Poset::from_covers(tags, pairs)?;
    Ok(Construction {
        group: g.clone(),
        partition: bp.clone(),
        poset,
        layers,
    })
}

pub const BOTTOM: &str = "0";
pub const TOP: &str = "1";
pub const CENTRE: &str = "c";

/// Adds a bottom `0`, a top `1` and a centre `c` with `F < c`, `G < c`
/// and `c < T`.
///
/// Whether the result is a lattice is not assumed; check it with
/// [`Poset::lattice_check`].
pub fn lattice_extension(c: &Construction) -> Result<Construction> {
    let base = c.poset.len();
    let mut tags = c.poset.tags().to_vec();
    tags.push(ElementTag::Extra(BOTTOM.into()));
    tags.push(ElementTag::Extra(TOP.into()));
    tags.push(ElementTag::Extra(CENTRE.into()));
    let (bottom, top, centre) = (base, base + 1, base + 2);

    let mut pairs = c.poset.cover_pairs();
    for x in 0..base {
        pairs.push((bottom, x));
        pairs.push((x, top));
    }
    pairs.push((bottom, centre));
    pairs.push((centre, top));
    for x in c.layers.fence().chain(c.layers.group.iter().copied()) {
        pairs.push((x, centre));
    }
    for &t in &c.layers.top {
        pairs.push((centre, t));
    }

    let mut layers = c.layers.clone();
    layers.extras = vec![bottom, top, centre];
    Ok(Construction {
        group: c.group.clone(),
        partition: c.partition.clone(),
        poset: Poset::from_covers(tags, pairs)?,
        layers,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_ELEMENT_CAP;

    pub(crate) fn build(n: usize, gens: &str, cut: &[&[u32]]) -> Construction {
        let g = PermGroup::from_cycle_strings(n, gens, DEFAULT_ELEMENT_CAP).unwrap();
        let cut: Vec<Vec<Point>> = cut
            .iter()
            .map(|s| s.iter().map(|p| p - 1).collect())
            .collect();
        let bp = g.validate_orbit_cut(&cut).unwrap();
        build_u(&g, &bp).unwrap()
    }

    pub(crate) fn s3() -> Construction {
        build(3, "(1 2),(1 2 3)", &[&[1, 2, 3]])
    }

    #[test]
    fn element_counts() {
        let c = s3();
        assert_eq!(c.len(), 33);
        assert_eq!(c.layers.fence().count(), 6);
        assert_eq!(c.layers.group.len(), 6);
        assert_eq!(c.layers.d_count(), 18);
        assert_eq!(c.layers.top.len(), 3);

        assert_eq!(build(4, "(1 2),(3 4),(1 3)(2 4)", &[&[1, 2]]).len(), 36);
        assert_eq!(
            build(9, "(1 2 3),(1 4 7)(2 5 8)(3 6 9)", &[&[1, 2, 3]]).len(),
            189
        );
    }

    #[test]
    fn fence_order() {
        let c = s3();
        let (l, u) = (&c.layers.fence_lower, &c.layers.fence_upper);
        assert!(c.poset.leq(l[0], u[0]));
        assert!(c.poset.lt(l[1], u[0]) && c.poset.lt(l[1], u[1]));
        assert!(!c.poset.comparable(l[0], u[1]));
        assert!(!c.poset.comparable(u[0], u[1]));
    }

    #[test]
    fn layer_relations() {
        let c = s3();
        let p = &c.poset;
        assert!(!p.comparable(c.layers.top[0], c.layers.top[1]));
        let sigma = c.group.elements()[3].clone();
        let block: Vec<Point> = vec![0, 1, 2];
        let mu = RestrictionMap::of(&sigma, &block);
        for j in 0..3 {
            let d = c.d_point(j, &mu).unwrap();
            assert!(p.lt(c.layers.fence_upper[j as usize], d));
            assert!(p.lt(d, c.layers.top[sigma.apply(j) as usize]));
            assert!(p.lt(c.layers.group[3], d));
        }
    }

    #[test]
    fn extension_adds_three() {
        let c = s3();
        let e = lattice_extension(&c).unwrap();
        assert_eq!(e.len(), 36);
        let [b, t, m] = [e.layers.extras[0], e.layers.extras[1], e.layers.extras[2]];
        assert_eq!(e.poset.minimal_elements(), vec![b]);
        assert_eq!(e.poset.maximal_elements(), vec![t]);
        assert!(e.layers.fence().all(|f| e.poset.lt(f, m)));
        assert!(e.layers.top.iter().all(|&x| e.poset.lt(m, x)));
        assert!(e.layers.d_points().all(|d| !e.poset.comparable(d, m)));
        assert_eq!(e.size_report().count_actual, Some(33));
    }
}
