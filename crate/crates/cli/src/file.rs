//! The construction file format.
//!
//! Element ids are 0-based indices into `elements`; every point inside a
//! tag, a generator or the cut is 1-based.

use anyhow::{bail, Context};
use permposet::construct::Construction;
use permposet::{ElementTag, Permutation, Point, Poset, RestrictionMap};
use serde::{Deserialize, Serialize};

use crate::input::one_based;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TagJson {
    FenceLower {
        point: Point,
    },
    FenceUpper {
        point: Point,
    },
    Group {
        perm: String,
    },
    DPoint {
        point: Point,
        domain: Vec<Point>,
        images: Vec<Point>,
    },
    Top {
        point: Point,
    },
    Extra {
        name: String,
    },
}

impl TagJson {
    fn from_tag(tag: &ElementTag) -> Self {
        let plus = |v: &[Point]| v.iter().map(|p| p + 1).collect();
        match tag {
            ElementTag::FenceLower(j) => Self::FenceLower { point: j + 1 },
            ElementTag::FenceUpper(j) => Self::FenceUpper { point: j + 1 },
            ElementTag::GroupElem(p) => Self::Group {
                perm: p.to_string(),
            },
            ElementTag::DPoint(j, mu) => Self::DPoint {
                point: j + 1,
                domain: plus(mu.domain()),
                images: plus(mu.images()),
            },
            ElementTag::TPoint(j) => Self::Top { point: j + 1 },
            ElementTag::Extra(name) => Self::Extra { name: name.clone() },
        }
    }

    fn to_tag(&self, degree: usize) -> anyhow::Result<ElementTag> {
        let zero = |p: Point| -> anyhow::Result<Point> {
            if p == 0 || p as usize > degree {
                bail!("point {p} outside 1..={degree}");
            }
            Ok(p - 1)
        };
        let zeros = |v: &[Point]| {
            v.iter()
                .map(|&p| zero(p))
                .collect::<anyhow::Result<Vec<_>>>()
        };
        Ok(match self {
            Self::FenceLower { point } => ElementTag::FenceLower(zero(*point)?),
            Self::FenceUpper { point } => ElementTag::FenceUpper(zero(*point)?),
            Self::Group { perm } => ElementTag::GroupElem(Permutation::parse_cycles(degree, perm)?),
            Self::DPoint {
                point,
                domain,
                images,
            } => {
                if domain.len() != images.len() {
                    bail!("restriction domain and images differ in length");
                }
                ElementTag::DPoint(
                    zero(*point)?,
                    RestrictionMap::from_pairs(&zeros(domain)?, &zeros(images)?),
                )
            }
            Self::Top { point } => ElementTag::TPoint(zero(*point)?),
            Self::Extra { name } => ElementTag::Extra(name.clone()),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: usize,
    pub tag: TagJson,
    pub label: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LayersJson {
    pub fence_lower: Vec<usize>,
    pub fence_upper: Vec<usize>,
    pub group: Vec<usize>,
    pub d_points: Vec<usize>,
    pub top: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionJson {
    pub degree: usize,
    pub generators: Vec<String>,
    pub cut: Vec<Vec<Point>>,
    pub elements: Vec<ElementJson>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub layers: LayersJson,
}

impl ConstructionJson {
    pub fn from_construction(c: &Construction) -> Self {
        let p = &c.poset;
        let l = &c.layers;
        Self {
            degree: c.degree(),
            generators: c
                .group
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect(),
            cut: one_based(&c.partition.orbit_cut),
            elements: p
                .tags()
                .iter()
                .enumerate()
                .map(|(id, tag)| ElementJson {
                    id,
                    tag: TagJson::from_tag(tag),
                    label: tag.to_string(),
                })
                .collect(),
            covers: p
                .cover_pairs()
                .into_iter()
                .map(|(lo, hi)| [lo, hi])
                .collect(),
            layers: LayersJson {
                fence_lower: l.fence_lower.clone(),
                fence_upper: l.fence_upper.clone(),
                group: l.group.clone(),
                d_points: l.d_points().collect(),
                top: l.top.clone(),
                extras: l.extras.clone(),
            },
        }
    }

    /// Rebuilds the ordered set, checking ids, tags and acyclicity.
    pub fn to_poset(&self) -> anyhow::Result<Poset> {
        let mut tags = Vec::with_capacity(self.elements.len());
        for (k, e) in self.elements.iter().enumerate() {
            if e.id != k {
                bail!(
                    "element ids must be 0, 1, 2, ... in order; found {} at position {k}",
                    e.id
                );
            }
            tags.push(
                e.tag
                    .to_tag(self.degree)
                    .with_context(|| format!("element {k}"))?,
            );
        }
        let pairs = self.covers.iter().map(|&[lo, hi]| (lo, hi));
        Ok(Poset::from_covers(tags, pairs)?)
    }
}
