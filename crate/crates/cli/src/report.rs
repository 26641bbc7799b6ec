//! JSON shapes of the reports, and their `--human` renderings.

use std::fmt::Write;

use num_rational::Ratio;
use permposet::autgroup::{Verdict, VerifyReport};
use permposet::construct::{SizeReport, SweepRow, SweepSource};
use serde::Serialize;

/// An exact ratio with a decimal approximation alongside.
#[derive(Clone, Debug, Serialize)]
pub struct RatioJson {
    pub exact: String,
    pub approx: f64,
}

impl From<Ratio<u128>> for RatioJson {
    fn from(r: Ratio<u128>) -> Self {
        Self {
            exact: r.to_string(),
            approx: *r.numer() as f64 / *r.denom() as f64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceJson {
    pub degree: usize,
    pub generators: Vec<String>,
    pub cut: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitTermJson {
    pub block_size: usize,
    pub m: usize,
    pub setwise_order: usize,
    pub d_points: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitiveJson {
    pub kernel_order: usize,
    pub num_blocks: usize,
    pub block_action_order: usize,
    pub value: RatioJson,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeJson {
    #[serde(flatten)]
    pub instance: InstanceJson,
    pub group_order: usize,
    pub count_predicted: u128,
    pub count_actual: Option<usize>,
    pub counts_agree: bool,
    pub per_orbit: Vec<OrbitTermJson>,
    pub transitive_identity: Option<TransitiveJson>,
    pub transitive_bound: Option<RatioJson>,
    pub bound_holds: Option<bool>,
    pub ratio: RatioJson,
}

impl SizeJson {
    pub fn new(instance: InstanceJson, r: &SizeReport) -> Self {
        Self {
            instance,
            group_order: r.order_of_g,
            count_predicted: r.count_predicted,
            count_actual: r.count_actual,
            counts_agree: r.counts_agree(),
            per_orbit: r
                .per_orbit_terms
                .iter()
                .map(|t| OrbitTermJson {
                    block_size: t.block_size,
                    m: t.m,
                    setwise_order: t.setwise_order,
                    d_points: t.d_points(),
                })
                .collect(),
            transitive_identity: r.transitive_identity.as_ref().map(|t| TransitiveJson {
                kernel_order: t.kernel_order,
                num_blocks: t.num_blocks,
                block_action_order: t.block_action_order,
                value: t.value.into(),
                holds: t.holds,
            }),
            transitive_bound: r.transitive_bound.map(Into::into),
            bound_holds: r.bound_holds,
            ratio: r.ratio.into(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "degree            {}", self.instance.degree);
        let _ = writeln!(s, "|G|               {}", self.group_order);
        let _ = writeln!(s, "predicted |U|     {}", self.count_predicted);
        if let Some(a) = self.count_actual {
            let _ = writeln!(s, "actual |U|        {a}");
        }
        for (i, t) in self.per_orbit.iter().enumerate() {
            let _ = writeln!(
                s,
                "orbit {:<3}         |B| = {}, m = {}, |G⟲B| = {}, D-points {}",
                i + 1,
                t.block_size,
                t.m,
                t.setwise_order,
                t.d_points
            );
        }
        if let Some(b) = &self.transitive_bound {
            let _ = writeln!(
                s,
                "transitive bound  {} ({})",
                b.exact,
                if self.bound_holds == Some(true) {
                    "holds"
                } else {
                    "violated"
                }
            );
        }
        let _ = writeln!(
            s,
            "|U| / |G|         {} ≈ {:.4}",
            self.ratio.exact, self.ratio.approx
        );
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub refinements: u64,
    pub leaves: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyJson {
    #[serde(flatten)]
    pub instance: InstanceJson,
    pub elements: usize,
    pub verdict: &'static str,
    pub aut_order: u128,
    pub group_order: usize,
    pub enumerated: bool,
    pub top_layer_preserved: bool,
    pub restriction_is_injective: bool,
    pub restriction_image_equals_g: bool,
    pub fence_fixed_pointwise: bool,
    pub structure_formula_holds: bool,
    pub homomorphism_holds: bool,
    pub stats: StatsJson,
}

impl VerifyJson {
    pub fn new(instance: InstanceJson, elements: usize, r: &VerifyReport) -> Self {
        Self {
            instance,
            elements,
            verdict: match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            },
            aut_order: r.aut_order,
            group_order: r.group_order,
            enumerated: r.enumerated,
            top_layer_preserved: r.top_layer_preserved,
            restriction_is_injective: r.restriction_is_injective,
            restriction_image_equals_g: r.restriction_image_equals_g,
            fence_fixed_pointwise: r.fence_fixed_pointwise,
            structure_formula_holds: r.structure_formula_holds,
            homomorphism_holds: r.homomorphism_holds,
            stats: StatsJson {
                nodes: r.stats.nodes,
                refinements: r.stats.refinements,
                leaves: r.stats.leaves,
            },
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "verdict                    {}", self.verdict);
        let _ = writeln!(s, "|U|                        {}", self.elements);
        let _ = writeln!(s, "|Aut(U)|                   {}", self.aut_order);
        let _ = writeln!(s, "|G|                        {}", self.group_order);
        let checks = [
            ("top layer preserved", self.top_layer_preserved),
            ("restriction injective", self.restriction_is_injective),
            ("restriction image = G", self.restriction_image_equals_g),
            ("fence fixed pointwise", self.fence_fixed_pointwise),
            ("structure formula", self.structure_formula_holds),
            ("homomorphism", self.homomorphism_holds),
        ];
        for (name, ok) in checks {
            let _ = writeln!(s, "{name:<27}{}", if ok { "yes" } else { "NO" });
        }
        let mode = if self.enumerated {
            "all automorphisms"
        } else {
            "generators"
        };
        let _ = writeln!(
            s,
            "search                     {} nodes, {} leaves ({mode})",
            self.stats.nodes, self.stats.leaves
        );
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeJson {
    pub base_elements: usize,
    pub elements: usize,
    pub added: usize,
    pub is_lattice: bool,
    /// The first incomparable pair without a join or meet.
    pub witness: Option<String>,
    pub aut_order: Option<u128>,
    pub group_order: usize,
}

impl LatticeJson {
    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "elements     {} (+{})", self.elements, self.added);
        let _ = writeln!(s, "is lattice   {}", self.is_lattice);
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness      {w}");
        }
        if let Some(a) = self.aut_order {
            let _ = writeln!(s, "|Aut|        {a} (|G| = {})", self.group_order);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRowJson {
    pub k: usize,
    pub n: usize,
    pub group_order: u128,
    pub count_formula: u128,
    pub count_actual: Option<usize>,
    pub ratio: RatioJson,
    pub bound: RatioJson,
    pub bound_ratio: RatioJson,
    pub source: &'static str,
}

impl From<&SweepRow> for SweepRowJson {
    fn from(r: &SweepRow) -> Self {
        Self {
            k: r.k,
            n: r.n,
            group_order: r.order,
            count_formula: r.count_formula,
            count_actual: r.count_actual,
            ratio: r.ratio.into(),
            bound: r.bound.into(),
            bound_ratio: r.bound_ratio.into(),
            source: match r.source {
                SweepSource::Built => "built",
                SweepSource::Enumerated => "enumerated",
                SweepSource::FormulaOnly => "formula-only",
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepJson {
    pub family: String,
    pub rows: Vec<SweepRowJson>,
    pub strictly_decreasing: bool,
}

impl SweepJson {
    pub fn human(&self) -> String {
        let width = |f: fn(&SweepRowJson) -> String, title: &str| {
            self.rows
                .iter()
                .map(|r| f(r).len())
                .chain([title.len()])
                .max()
                .unwrap_or(0)
        };
        let wg = width(|r| r.group_order.to_string(), "|G|");
        let wu = width(|r| r.count_formula.to_string(), "|U| formula");
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>3} {:>4} {:>wg$} {:>wu$} {:>9} {:>8} {:>8}  source",
            "k", "n", "|G|", "|U| formula", "|U| built", "ratio", "bound"
        );
        for r in &self.rows {
            let actual = r
                .count_actual
                .map_or_else(|| "-".to_string(), |a| a.to_string());
            let _ = writeln!(
                s,
                "{:>3} {:>4} {:>wg$} {:>wu$} {:>9} {:>8.4} {:>8.4}  {}",
                r.k,
                r.n,
                r.group_order,
                r.count_formula,
                actual,
                r.ratio.approx,
                r.bound_ratio.approx,
                r.source
            );
        }
        let _ = writeln!(
            s,
            "ratios strictly decreasing: {}",
            self.strictly_decreasing
        );
        s
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "k",
            "n",
            "group_order",
            "count_formula",
            "count_actual",
            "ratio",
            "ratio_approx",
            "bound",
            "bound_ratio_approx",
            "source",
        ])?;
        for r in &self.rows {
            w.write_record([
                r.k.to_string(),
                r.n.to_string(),
                r.group_order.to_string(),
                r.count_formula.to_string(),
                r.count_actual.map(|a| a.to_string()).unwrap_or_default(),
                r.ratio.exact.clone(),
                format!("{:.6}", r.ratio.approx),
                r.bound.exact.clone(),
                format!("{:.6}", r.bound_ratio.approx),
                r.source.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
