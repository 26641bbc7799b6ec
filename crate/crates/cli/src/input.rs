//! Group and orbit-cut arguments.

use std::str::FromStr;

use permposet::error::PermError;
use permposet::{PermGroup, Point};

/// How to choose one block per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutSpec {
    /// Each whole orbit.
    Trivial,
    /// The least point of each orbit.
    Singletons,
    /// The smallest block containing `p` and `q` (1-based) in their orbit;
    /// singletons elsewhere.
    Auto(Point, Point),
    /// Explicit 1-based point sets, as JSON.
    Explicit(Vec<Vec<Point>>),
}

impl FromStr for CutSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "trivial" => return Ok(Self::Trivial),
            "singletons" => return Ok(Self::Singletons),
            _ => {}
        }
        if let Some(seed) = s.strip_prefix("auto:") {
            let points: Vec<Point> = seed
                .split(',')
                .map(|p| p.trim().parse::<Point>())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("bad auto seed {seed:?}: {e}"))?;
            return match points[..] {
                [p, q] if p > 0 && q > 0 => Ok(Self::Auto(p, q)),
                _ => Err(format!(
                    "auto seed must be two 1-based points, got {seed:?}"
                )),
            };
        }
        let sets: Vec<Vec<Point>> = serde_json::from_str(s).map_err(|e| {
            format!("cut must be trivial, singletons, auto:p,q or a JSON list of point sets ({e})")
        })?;
        if sets.iter().flatten().any(|&p| p == 0) {
            return Err("cut points are 1-based".into());
        }
        Ok(Self::Explicit(sets))
    }
}

impl CutSpec {
    /// The 0-based orbit cut this spec selects, not yet validated.
    pub fn resolve(&self, g: &PermGroup) -> Result<Vec<Vec<Point>>, PermError> {
        Ok(match self {
            Self::Trivial => g.trivial_cut(),
            Self::Singletons => g.singleton_cut(),
            Self::Auto(p, q) => {
                let block = g.minimal_block(&[p - 1, q - 1])?;
                g.orbits()
                    .into_iter()
                    .map(|orbit| {
                        if orbit.contains(&block[0]) {
                            block.clone()
                        } else {
                            vec![orbit[0]]
                        }
                    })
                    .collect()
            }
            Self::Explicit(sets) => sets
                .iter()
                .map(|s| s.iter().map(|p| p - 1).collect())
                .collect(),
        })
    }
}

/// 1-based copy of a list of point sets.
pub fn one_based(sets: &[Vec<Point>]) -> Vec<Vec<Point>> {
    sets.iter()
        .map(|s| s.iter().map(|p| p + 1).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keywords_and_json() {
        assert_eq!("trivial".parse(), Ok(CutSpec::Trivial));
        assert_eq!(" singletons ".parse(), Ok(CutSpec::Singletons));
        assert_eq!("auto:1,3".parse(), Ok(CutSpec::Auto(1, 3)));
        assert_eq!(
            "[[1,2],[5]]".parse(),
            Ok(CutSpec::Explicit(vec![vec![1, 2], vec![5]]))
        );
        assert!("auto:1".parse::<CutSpec>().is_err());
        assert!("[[0]]".parse::<CutSpec>().is_err());
        assert!("blocks".parse::<CutSpec>().is_err());
    }

    #[test]
    fn auto_uses_singletons_off_the_seed_orbit() {
        let g = PermGroup::from_cycle_strings(5, "(1 2)(3 4)", 100).unwrap();
        let cut = CutSpec::Auto(1, 2).resolve(&g).unwrap();
        assert_eq!(cut, vec![vec![0, 1], vec![2], vec![4]]);
    }
}
