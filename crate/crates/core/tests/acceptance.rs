//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use permposet::autgroup::{
    automorphisms, automorphisms_with, restrict_to_t, verify_theorem, SearchConfig, Verdict,
};
use permposet::construct::{
    build_u, family_gk, lattice_extension, predicted_size, structural_audit, sweep_row,
    Construction, SweepOptions,
};
use permposet::{LatticeCheck, PermGroup, Permutation, Point, RestrictionMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;
const RANDOM_GROUPS: usize = 60;
const RANDOM_POSETS: usize = 200;

type Criterion = Box<dyn FnOnce() -> Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(checks: &[(&str, bool)], detail: String) -> Self {
        let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
        let detail = if failed.is_empty() {
            detail
        } else {
            format!("{detail}; failed: {}", failed.join(", "))
        };
        Self {
            pass: failed.is_empty(),
            detail,
        }
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.2?}, limit {:?}]", out.detail, elapsed, limit);
    if elapsed > limit {
        out.pass = false;
        out.detail.push_str("; over time limit");
    }
    out
}

fn construction(n: usize, gens: &str, cut: Vec<Vec<Point>>) -> Construction {
    let g = PermGroup::from_cycle_strings(n, gens, 10_000).unwrap();
    build_u(&g, &g.validate_orbit_cut(&cut).unwrap()).unwrap()
}

/// `|G| + 3n + Σ |B| m² |G⟲B|`, computed straight from the element list.
fn count_oracle(g: &PermGroup, cut: &[Vec<Point>]) -> u128 {
    let mut total = g.order() as u128 + 3 * g.degree() as u128;
    for b in cut {
        let mut b = b.clone();
        b.sort_unstable();
        let images: HashSet<Vec<Point>> = g.elements().iter().map(|s| s.image_of_set(&b)).collect();
        let setwise: HashSet<RestrictionMap> = g
            .elements()
            .iter()
            .filter(|s| s.image_of_set(&b) == b)
            .map(|s| RestrictionMap::of(s, &b))
            .collect();
        let m = images.len() as u128;
        total += b.len() as u128 * m * m * setwise.len() as u128;
    }
    total
}

fn s3_golden() -> Outcome {
    let c = construction(3, "(1 2),(1 2 3)", vec![vec![0, 1, 2]]);
    let report = verify_theorem(&c).unwrap();
    let all = automorphisms(&c.poset).unwrap().automorphisms.unwrap();
    let image: BTreeSet<Permutation> = all.iter().map(|a| restrict_to_t(&c, a).unwrap()).collect();
    let s3: BTreeSet<Permutation> = c.group.elements().iter().cloned().collect();
    let fence: Vec<usize> = c.layers.fence().collect();
    let (n, order) = (c.degree(), c.group.order());
    Outcome::new(
        &[
            (
                "33 elements",
                c.len() == 33 && (n + 1) * order + 3 * n == 33,
            ),
            (
                "layer sizes 6/6/18/3",
                fence.len() == 6
                    && c.layers.group.len() == 6
                    && c.layers.d_count() == 18
                    && c.layers.top.len() == 3,
            ),
            ("order 6", report.aut_order == 6 && all.len() == 6),
            ("image is S3", image == s3 && s3.len() == 6),
            (
                "fence fixed",
                all.iter().all(|a| fence.iter().all(|&x| a.apply(x) == x)),
            ),
            ("verdict", report.verdict == Verdict::Pass),
        ],
        format!("|U| = {}, |Aut| = {}", c.len(), report.aut_order),
    )
}

fn wreath(k: usize, order: u128, count: u128, aut: u128) -> Outcome {
    let (g, bp) = family_gk(k, 10_000).unwrap();
    let size = predicted_size(&g, &bp);
    let c = build_u(&g, &bp).unwrap();
    let report = verify_theorem(&c).unwrap();
    let mut checks = vec![
        ("|G|", g.order() as u128 == order),
        (
            "|U|",
            c.len() as u128 == count && size.count_predicted == count,
        ),
        ("count oracle", count_oracle(&g, &bp.orbit_cut) == count),
        ("aut order", report.aut_order == aut),
        ("verdict", report.verdict == Verdict::Pass),
    ];
    let ratio = Ratio::new(count, order);
    if k == 2 {
        // 8 (1 + (2/4) 7)
        let bound = Ratio::from_integer(8u128)
            * (Ratio::from_integer(1) + Ratio::new(2u128, 4) * Ratio::from_integer(7));
        checks.push((
            "bound 36",
            size.transitive_bound == Some(bound) && bound == Ratio::from_integer(36),
        ));
    } else {
        checks.push(("below 3|G|", ratio < Ratio::from_integer(3)));
    }
    Outcome::new(
        &checks,
        format!(
            "|G| = {}, |U| = {}, ratio {}, |Aut| = {}",
            g.order(),
            c.len(),
            ratio,
            report.aut_order
        ),
    )
}

fn sweep() -> Outcome {
    let opts = SweepOptions::default();
    let rows: Vec<_> = (2..=4).map(|k| sweep_row(k, opts).unwrap()).collect();
    let expected = [
        Ratio::new(9u128, 2),
        Ratio::new(7, 3),
        Ratio::new(1328, 1024),
    ];
    let closed_forms = rows.iter().all(|r| {
        let k = r.k as u128;
        let order = k.pow(r.k as u32 + 1);
        r.order == order && r.count_formula == order + 3 * k * k + k.pow(4)
    });
    let bounds = rows.iter().all(|r| {
        let k = r.k as u128;
        let b = Ratio::from_integer(1)
            + Ratio::new(k, k.pow(r.k as u32)) * Ratio::from_integer(k * k + 3);
        r.bound_ratio == b && r.ratio <= b
    });
    let ratios: Vec<Ratio<u128>> = rows.iter().map(|r| r.ratio).collect();
    let shown: Vec<String> = ratios
        .iter()
        .map(|r| format!("{:.4}", *r.numer() as f64 / *r.denom() as f64))
        .collect();
    Outcome::new(
        &[
            ("ratios 9/2, 7/3, 1328/1024", ratios == expected),
            (
                "strictly decreasing",
                ratios.windows(2).all(|w| w[0] > w[1]),
            ),
            ("closed forms", closed_forms),
            ("bound", bounds),
        ],
        format!("ratios {}", shown.join(", ")),
    )
}

fn random_groups() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut counts, mut verdicts, mut audits) = (0, 0, 0);
    let mut transitive = 0;
    for _ in 0..RANDOM_GROUPS {
        let n = rng.gen_range(2..=5);
        let g = common::random_group(&mut rng, n);
        transitive += usize::from(g.is_transitive());
        let cut = common::random_cut(&mut rng, &g);
        let c = build_u(&g, &g.validate_orbit_cut(&cut).unwrap()).unwrap();
        counts += usize::from(c.len() as u128 == count_oracle(&g, &cut));
        verdicts += usize::from(verify_theorem(&c).unwrap().verdict == Verdict::Pass);
        audits += usize::from(structural_audit(&c).passed());
    }
    Outcome::new(
        &[
            ("count", counts == RANDOM_GROUPS),
            ("verdict", verdicts == RANDOM_GROUPS),
            ("audit", audits == RANDOM_GROUPS),
        ],
        format!(
            "{RANDOM_GROUPS} groups ({transitive} transitive): count {counts}, verify {verdicts}, audit {audits}"
        ),
    )
}

fn engine_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    // Lists groups up to |S_9| instead of switching to generators.
    let every = SearchConfig {
        enumeration_limit: 362_880,
        ..SearchConfig::default()
    };
    let mut agree = 0;
    let mut nontrivial = 0;
    for _ in 0..RANDOM_POSETS {
        let n = rng.gen_range(1..=9);
        let density = rng.gen_range(0.0..0.6);
        let p = common::random_poset(&mut rng, n, density);
        let found: BTreeSet<Vec<usize>> = automorphisms_with(&p, &every)
            .unwrap()
            .automorphisms
            .unwrap()
            .iter()
            .map(|a| a.to_map())
            .collect();
        let expected = common::brute_force_automorphisms(&p);
        nontrivial += usize::from(expected.len() > 1);
        agree += usize::from(found == expected);
    }
    Outcome::new(
        &[("set equality", agree == RANDOM_POSETS)],
        format!("{agree}/{RANDOM_POSETS} posets agree ({nontrivial} with nontrivial groups)"),
    )
}

fn lattice() -> Outcome {
    let mut instances = vec![
        construction(3, "(1 2),(1 2 3)", vec![vec![0, 1, 2]]),
        construction(4, "(1 2),(3 4),(1 3)(2 4)", vec![vec![0, 1]]),
        construction(3, "(1 2)", vec![vec![0], vec![2]]),
    ];
    for n in 1..=3 {
        instances.push(construction(
            n,
            "",
            (0..n as Point).map(|x| vec![x]).collect(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let g = common::random_group(&mut rng, n);
        let cut = common::random_cut(&mut rng, &g);
        instances.push(build_u(&g, &g.validate_orbit_cut(&cut).unwrap()).unwrap());
    }
    let total = instances.len();
    let (mut plus_three, mut lattices, mut orders) = (0, 0, 0);
    let mut witness = None;
    for c in &instances {
        let e = lattice_extension(c).unwrap();
        plus_three += usize::from(e.len() == c.len() + 3);
        let check = e.poset.lattice_check();
        if check.holds() {
            lattices += 1;
        } else if witness.is_none() {
            witness = match check {
                LatticeCheck::NoJoin(x, y) => Some(format!(
                    "no join of {} and {}",
                    e.poset.tag(x),
                    e.poset.tag(y)
                )),
                LatticeCheck::NoMeet(x, y) => Some(format!(
                    "no meet of {} and {}",
                    e.poset.tag(x),
                    e.poset.tag(y)
                )),
                LatticeCheck::Lattice => None,
            };
        }
        orders += usize::from(automorphisms(&e.poset).unwrap().order == c.group.order() as u128);
    }
    Outcome::new(
        &[
            ("+3 elements", plus_three == total),
            ("is_lattice", lattices == total),
            ("|Aut| = |G|", orders == total),
        ],
        format!(
            "{total} instances: +3 {plus_three}, lattice {lattices}, order {orders}{}",
            witness
                .map(|w| format!(", first witness {w}"))
                .unwrap_or_default()
        ),
    )
}

fn degenerate() -> Outcome {
    let mut checks = Vec::new();
    let mut sizes = Vec::new();
    for n in 1..=3usize {
        let c = construction(n, "", (0..n as Point).map(|x| vec![x]).collect());
        sizes.push(c.len());
        checks.push(c.len() == 1 + 4 * n && structural_audit(&c).passed());
        checks.push(automorphisms(&c.poset).unwrap().order == 1);
    }
    Outcome::new(
        &[("build, audit, trivial Aut", checks.iter().all(|&b| b))],
        format!("sizes {sizes:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        (
            "S3 golden case",
            Box::new(|| timed(Duration::from_secs(1), s3_golden)),
        ),
        (
            "C2 wr C2",
            Box::new(|| timed(Duration::from_secs(5), || wreath(2, 8, 36, 8))),
        ),
        (
            "C3 wr C3",
            Box::new(|| timed(Duration::from_secs(120), || wreath(3, 81, 189, 81))),
        ),
        ("cyclic wreath sweep k = 2..4", Box::new(sweep)),
        (
            "random subgroups of S_n, n <= 5",
            Box::new(|| timed(Duration::from_secs(600), random_groups)),
        ),
        (
            "automorphism search vs brute force",
            Box::new(engine_oracle),
        ),
        ("lattice extension, n <= 4", Box::new(lattice)),
        ("trivial groups, n = 1..3", Box::new(degenerate)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let out = run();
        failures += usize::from(!out.pass);
        println!(
            "criterion {} {:<38} {}  {}",
            i + 1,
            name,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criterion(s) failed");
        ExitCode::FAILURE
    }
}
