//! Checks that restricting automorphisms of a construction to its top layer
//! is an isomorphism onto the group it was built from.
//!
//! The automorphisms come from [`automorphisms_with`], which sees only the
//! order relation. Layer metadata is used afterwards to interpret them.

use std::collections::HashSet;

use super::search::{automorphisms_with, AutResult, Automorphism, SearchConfig, SearchStats};
use crate::construct::Construction;
use crate::error::AutError;
use crate::permgroup::{PermGroup, Permutation, Point};

/// Above this group order the homomorphism check uses generator pairs only.
const ALL_PAIRS_LIMIT: u128 = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub aut_order: u128,
    pub group_order: usize,
    /// Whether every automorphism was listed (otherwise generators only).
    pub enumerated: bool,
    pub top_layer_preserved: bool,
    pub restriction_is_injective: bool,
    pub restriction_image_equals_g: bool,
    /// Fence points (and any extension extras) are fixed.
    pub fence_fixed_pointwise: bool,
    /// `Ψ(θ) = σθ` and `Ψ(j, μ) = (j, σμ)` with `σ = Ψ|_T`.
    pub structure_formula_holds: bool,
    /// `(ΦΨ)|_T = Φ|_T Ψ|_T`.
    pub homomorphism_holds: bool,
    pub verdict: Verdict,
    pub stats: SearchStats,
}

/// The permutation of `{1..n}` that `a` induces on the top layer.
pub fn restrict_to_t(c: &Construction, a: &Automorphism) -> Result<Permutation, AutError> {
    let mut top_pos = vec![None; c.poset.len()];
    for (j, &t) in c.layers.top.iter().enumerate() {
        top_pos[t] = Some(j as Point);
    }
    restrict_with(&top_pos, c, a)
}

fn restrict_with(
    top_pos: &[Option<Point>],
    c: &Construction,
    a: &Automorphism,
) -> Result<Permutation, AutError> {
    let images = c
        .layers
        .top
        .iter()
        .map(|&t| top_pos[a.apply(t)].ok_or(AutError::TopLayerNotPreserved))
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_images(images).map_err(|_| AutError::TopLayerNotPreserved)
}

/// `Φ_σ`: identity on the fence (and extras), `θ ↦ σθ`, `(j, μ) ↦ (j, σμ)`
/// and `j ↦ σ(j)` on the top layer. Checked order-preserving.
pub fn induced_automorphism(
    c: &Construction,
    sigma: &Permutation,
) -> Result<Automorphism, AutError> {
    if !c.group.contains(sigma) {
        return Err(AutError::NotInGroup(sigma.to_string()));
    }
    let map = induced_map(c, sigma);
    if !c.poset.is_automorphism(&map) {
        return Err(AutError::NotAnAutomorphism(format!(
            "induced map of {sigma}"
        )));
    }
    Ok(Automorphism::from_map(map))
}

fn induced_map(c: &Construction, sigma: &Permutation) -> Vec<usize> {
    let l = &c.layers;
    let mut map: Vec<usize> = (0..c.poset.len()).collect();
    for (k, theta) in c.group.elements().iter().enumerate() {
        let target = c
            .group
            .index_of(&sigma.compose_unchecked(theta))
            .expect("group is closed");
        map[l.group[k]] = l.group[target];
    }
    for d in &l.d_groups {
        let image = d.mu.after(sigma);
        for (&j, &x) in d.mu.domain().iter().zip(&d.points) {
            map[x] = c.d_point(j, &image).expect("σμ is a restriction");
        }
    }
    for (j, &t) in l.top.iter().enumerate() {
        map[t] = l.top[sigma.apply(j as Point) as usize];
    }
    map
}

pub fn verify_theorem(c: &Construction) -> Result<VerifyReport, AutError> {
    verify_theorem_with(c, &SearchConfig::default())
}

pub fn verify_theorem_with(c: &Construction, cfg: &SearchConfig) -> Result<VerifyReport, AutError> {
    let result = automorphisms_with(&c.poset, cfg)?;
    Ok(assess(c, &result))
}

/// Evaluates every claim against an already computed automorphism group.
pub fn assess(c: &Construction, result: &AutResult) -> VerifyReport {
    let mut top_pos = vec![None; c.poset.len()];
    for (j, &t) in c.layers.top.iter().enumerate() {
        top_pos[t] = Some(j as Point);
    }
    let checked: &[Automorphism] = result
        .automorphisms
        .as_deref()
        .unwrap_or(&result.generators);
    let restricted: Option<Vec<Permutation>> = checked
        .iter()
        .map(|a| restrict_with(&top_pos, c, a).ok())
        .collect();
    let group_order = c.group.order();

    let mut report = VerifyReport {
        aut_order: result.order,
        group_order,
        enumerated: result.automorphisms.is_some(),
        top_layer_preserved: restricted.is_some(),
        restriction_is_injective: false,
        restriction_image_equals_g: false,
        fence_fixed_pointwise: false,
        structure_formula_holds: false,
        homomorphism_holds: false,
        verdict: Verdict::Fail,
        stats: result.stats,
    };
    let Some(restricted) = restricted else {
        return report;
    };

    if report.enumerated {
        let distinct: HashSet<&Permutation> = restricted.iter().collect();
        report.restriction_is_injective = distinct.len() == restricted.len();
        report.restriction_image_equals_g =
            distinct.len() == group_order && restricted.iter().all(|s| c.group.contains(s));
    } else {
        let image = PermGroup::closure_with_cap(
            c.degree(),
            restricted.clone(),
            group_order.saturating_add(1),
        );
        report.restriction_image_equals_g = image.is_ok_and(|h| h == c.group);
        // A surjection between groups of equal order is injective.
        report.restriction_is_injective =
            report.restriction_image_equals_g && result.order == group_order as u128;
    }

    let fixed: Vec<usize> = c
        .layers
        .fence()
        .chain(c.layers.extras.iter().copied())
        .collect();
    report.fence_fixed_pointwise = checked
        .iter()
        .all(|a| fixed.iter().all(|&x| a.apply(x) == x));

    report.structure_formula_holds = checked.iter().zip(&restricted).all(|(a, sigma)| {
        c.group.contains(sigma) && {
            let expected = induced_map(c, sigma);
            c.layers
                .group
                .iter()
                .chain(&c.layers.top)
                .all(|&x| a.apply(x) == expected[x])
                && c.layers.d_points().all(|x| a.apply(x) == expected[x])
        }
    });

    let pairs_with: &[Automorphism] = if report.enumerated && result.order <= ALL_PAIRS_LIMIT {
        checked
    } else {
        &result.generators
    };
    report.homomorphism_holds = checked.iter().zip(&restricted).all(|(phi, phi_t)| {
        pairs_with.iter().all(|psi| {
            let Ok(psi_t) = restrict_with(&top_pos, c, psi) else {
                return false;
            };
            restrict_with(&top_pos, c, &phi.compose(psi))
                .is_ok_and(|comp| comp == phi_t.compose_unchecked(&psi_t))
        })
    });

    let all_true = report.top_layer_preserved
        && report.restriction_is_injective
        && report.restriction_image_equals_g
        && report.fence_fixed_pointwise
        && report.structure_formula_holds
        && report.homomorphism_holds;
    if all_true && report.aut_order == group_order as u128 {
        report.verdict = Verdict::Pass;
    }
    report
}
