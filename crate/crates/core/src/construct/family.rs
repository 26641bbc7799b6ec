//! The wreath family `C_k ≀ C_k` on `k²` points: `k` disjoint `k`-cycles on
//! consecutive blocks plus the shift moving block `ℓ` onto block `ℓ+1`.
//! Element count over group order tends to 1 as `k` grows.

use num_rational::Ratio;

use super::{build_u, predicted_size};
use crate::error::{PermError, Result};
use crate::permgroup::{BlockPartition, PermGroup, Permutation, Point};

const MAX_K: usize = 20;

/// The group and its partition into `k` consecutive blocks of size `k`.
pub fn family_gk(k: usize, element_cap: usize) -> Result<(PermGroup, BlockPartition), PermError> {
    if !(2..=MAX_K).contains(&k) {
        return Err(PermError::FamilyParameter(k));
    }
    let n = k * k;
    let mut generators = Vec::with_capacity(k + 1);
    for block in 0..k {
        let cycle: Vec<Point> = (0..k).map(|i| (block * k + i) as Point).collect();
        generators.push(Permutation::from_cycles(n, &[cycle])?);
    }
    let shift: Vec<Point> = (0..n).map(|x| ((x + k) % n) as Point).collect();
    generators.push(Permutation::from_images(shift)?);
    let g = PermGroup::closure_with_cap(n, generators, element_cap)?;
    let first: Vec<Point> = (0..k as Point).collect();
    let bp = g.validate_orbit_cut(&[first])?;
    Ok((g, bp))
}

/// `(|G_k|, |U|)` from the closed forms `k^(k+1)` and
/// `k^(k+1) + 3k² + k⁴`.
pub fn cyclic_wreath_closed_form(k: usize) -> Result<(u128, u128), PermError> {
    if !(2..=MAX_K).contains(&k) {
        return Err(PermError::FamilyParameter(k));
    }
    let k = k as u128;
    let order = k.pow(k as u32 + 1);
    Ok((order, order + 3 * k * k + k.pow(4)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepSource {
    /// Group enumerated and `U` built.
    Built,
    /// Group enumerated; `U` too large to build.
    Enumerated,
    /// Group above the closure cap; closed forms only.
    FormulaOnly,
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub element_cap: usize,
    /// Largest predicted `|U|` that is actually built.
    pub build_limit: u128,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            element_cap: crate::permgroup::DEFAULT_ELEMENT_CAP,
            build_limit: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub k: usize,
    pub n: usize,
    pub order: u128,
    pub count_formula: u128,
    pub count_actual: Option<usize>,
    /// `count_formula / order`.
    pub ratio: Ratio<u128>,
    /// `|G| (1 + (|G⟲B_1|/|N|)(n + 3))`.
    pub bound: Ratio<u128>,
    /// `1 + (k / k^k)(k² + 3)`.
    pub bound_ratio: Ratio<u128>,
    pub source: SweepSource,
}

pub fn sweep_row(k: usize, opts: SweepOptions) -> Result<SweepRow> {
    let (closed_order, closed_count) = cyclic_wreath_closed_form(k)?;
    let kk = k as u128;
    let bound_ratio = Ratio::from_integer(1) + Ratio::new(kk * (kk * kk + 3), kk.pow(k as u32));
    let mut row = SweepRow {
        k,
        n: k * k,
        order: closed_order,
        count_formula: closed_count,
        count_actual: None,
        ratio: Ratio::new(closed_count, closed_order),
        bound: bound_ratio * Ratio::from_integer(closed_order),
        bound_ratio,
        source: SweepSource::FormulaOnly,
    };
    let (g, bp) = match family_gk(k, opts.element_cap) {
        Ok(x) => x,
        Err(PermError::CapExceeded { .. }) => return Ok(row),
        Err(e) => return Err(e.into()),
    };
    let report = predicted_size(&g, &bp);
    row.order = g.order() as u128;
    row.count_formula = report.count_predicted;
    row.ratio = Ratio::new(report.count_predicted, row.order);
    row.bound = report.transitive_bound.expect("family is transitive");
    row.source = SweepSource::Enumerated;
    if report.count_predicted <= opts.build_limit {
        let c = build_u(&g, &bp)?;
        row.count_actual = Some(c.len());
        row.source = SweepSource::Built;
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        let (g, bp) = family_gk(2, 1000).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(bp.blocks.len(), 2);
        let (g, bp) = family_gk(3, 1000).unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(bp.m, vec![3]);
        assert!(matches!(
            family_gk(1, 1000),
            Err(PermError::FamilyParameter(1))
        ));
        assert!(matches!(
            family_gk(4, 100),
            Err(PermError::CapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn closed_form_matches_enumeration() {
        assert_eq!(cyclic_wreath_closed_form(2).unwrap(), (8, 36));
        assert_eq!(cyclic_wreath_closed_form(3).unwrap(), (81, 189));
        assert_eq!(cyclic_wreath_closed_form(4).unwrap(), (1024, 1328));
        for k in 2..=4 {
            let (g, bp) = family_gk(k, 10_000).unwrap();
            let r = predicted_size(&g, &bp);
            assert_eq!(
                (g.order() as u128, r.count_predicted),
                cyclic_wreath_closed_form(k).unwrap()
            );
        }
    }

    #[test]
    fn rows_without_building() {
        let opts = SweepOptions {
            element_cap: 100,
            build_limit: 0,
        };
        let r = sweep_row(3, opts).unwrap();
        assert_eq!(r.source, SweepSource::Enumerated);
        assert_eq!(r.ratio, Ratio::new(7, 3));
        let r = sweep_row(4, opts).unwrap();
        assert_eq!(r.source, SweepSource::FormulaOnly);
        assert_eq!(r.ratio, Ratio::new(1328, 1024));
        assert_eq!(r.bound, Ratio::from_integer(1328));
    }
}
