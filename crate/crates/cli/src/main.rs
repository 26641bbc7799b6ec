//! `permposet`: build, verify and measure ordered sets that realise a
//! permutation group.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input,
//! 3 a resource cap was hit.

mod file;
mod input;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use permposet::autgroup::{
    assess, automorphisms_with, SearchConfig, Verdict, DEFAULT_MAX_ELEMENTS,
};
use permposet::construct::{
    build_u, lattice_extension, predicted_size, sweep_row, Construction, SweepOptions,
};
use permposet::error::{AutError, PermError};
use permposet::permgroup::DEFAULT_ELEMENT_CAP;
use permposet::{BlockPartition, LatticeCheck, PermGroup};
use rayon::prelude::*;
use serde::Serialize;

use file::ConstructionJson;
use input::{one_based, CutSpec};
use report::{InstanceJson, LatticeJson, SizeJson, SweepJson, SweepRowJson, VerifyJson};

#[derive(Parser)]
#[command(
    name = "permposet",
    version,
    about = "Ordered sets with a prescribed automorphism group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the ordered set and write it as JSON.
    Build(GroupArgs),
    /// Build, compute the automorphism group and check it restricts to G.
    Verify(GroupArgs),
    /// Predict the element count without building.
    Size(GroupArgs),
    /// Tabulate the cyclic wreath family.
    Sweep(SweepArgs),
    /// Add bottom, top and centre elements and test the lattice property.
    Lattice(GroupArgs),
    /// Render a construction file as a Graphviz Hasse diagram.
    ExportDot(DotArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Number of points.
    #[arg(long)]
    degree: usize,
    /// Comma-separated generators in cycle notation, e.g. "(1 2),(1 2 3)".
    #[arg(long, default_value = "")]
    gens: String,
    /// trivial, singletons, auto:p,q or a JSON list such as [[1,2]].
    #[arg(long, default_value = "trivial")]
    cut: CutSpec,
    /// Output file for the construction JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest group the closure may enumerate.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    /// Largest ordered set the automorphism search accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
    search_cap: usize,
    /// Print a table instead of JSON.
    #[arg(long)]
    human: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CyclicWreath,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "cyclic-wreath")]
    family: Family,
    /// Largest k (at least 2, at most 20).
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    /// Largest predicted element count that is actually built.
    #[arg(long, default_value_t = SweepOptions::default().build_limit)]
    build_limit: u128,
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct DotArgs {
    /// Construction JSON written by `build` or `lattice`.
    input: PathBuf,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Instance {
    group: PermGroup,
    partition: BlockPartition,
}

impl GroupArgs {
    fn instance(&self) -> anyhow::Result<Instance> {
        let group = PermGroup::from_cycle_strings(self.degree, &self.gens, self.cap)?;
        let cut = self.cut.resolve(&group)?;
        let partition = group.validate_orbit_cut(&cut)?;
        Ok(Instance { group, partition })
    }

    fn search(&self) -> SearchConfig {
        SearchConfig {
            max_elements: self.search_cap,
            ..SearchConfig::default()
        }
    }
}

impl Instance {
    fn describe(&self) -> InstanceJson {
        InstanceJson {
            degree: self.group.degree(),
            generators: self
                .group
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect(),
            cut: one_based(&self.partition.orbit_cut),
        }
    }

    fn build(&self) -> anyhow::Result<Construction> {
        Ok(build_u(&self.group, &self.partition)?)
    }
}

fn emit<T: Serialize>(
    value: &T,
    human: bool,
    table: impl FnOnce(&T) -> String,
) -> anyhow::Result<()> {
    if human {
        print!("{}", table(value));
    } else {
        println!("{}", serde_json::to_string_pretty(value)?);
    }
    Ok(())
}

fn write_construction(c: &Construction, path: &Path) -> anyhow::Result<()> {
    let json = serde_json::to_string_pretty(&ConstructionJson::from_construction(c))?;
    fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))
}

fn build(args: &GroupArgs) -> anyhow::Result<ExitCode> {
    let inst = args.instance()?;
    let c = inst.build()?;
    if let Some(path) = &args.out {
        write_construction(&c, path)?;
    }
    emit(
        &SizeJson::new(inst.describe(), &c.size_report()),
        args.human,
        SizeJson::human,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn size(args: &GroupArgs) -> anyhow::Result<ExitCode> {
    let inst = args.instance()?;
    let report = predicted_size(&inst.group, &inst.partition);
    emit(
        &SizeJson::new(inst.describe(), &report),
        args.human,
        SizeJson::human,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &GroupArgs) -> anyhow::Result<ExitCode> {
    let inst = args.instance()?;
    let c = inst.build()?;
    if let Some(path) = &args.out {
        write_construction(&c, path)?;
    }
    let aut = automorphisms_with(&c.poset, &args.search())?;
    let report = assess(&c, &aut);
    emit(
        &VerifyJson::new(inst.describe(), c.len(), &report),
        args.human,
        VerifyJson::human,
    )?;
    Ok(match report.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
    })
}

fn lattice(args: &GroupArgs) -> anyhow::Result<ExitCode> {
    let inst = args.instance()?;
    let base = inst.build()?;
    let e = lattice_extension(&base)?;
    if let Some(path) = &args.out {
        write_construction(&e, path)?;
    }
    let check = e.poset.lattice_check();
    let witness = match check {
        LatticeCheck::Lattice => None,
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
    };
    let aut_order = match automorphisms_with(&e.poset, &args.search()) {
        Ok(r) => Some(r.order),
        Err(AutError::TooLarge { .. }) => None,
        Err(err) => return Err(err.into()),
    };
    let report = LatticeJson {
        base_elements: base.len(),
        elements: e.len(),
        added: e.len() - base.len(),
        is_lattice: check.holds(),
        witness,
        aut_order,
        group_order: inst.group.order(),
    };
    emit(&report, args.human, LatticeJson::human)?;
    Ok(if report.is_lattice {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn sweep(args: &SweepArgs) -> anyhow::Result<ExitCode> {
    let Family::CyclicWreath = args.family;
    if !(2..=20).contains(&args.k_max) {
        bail!("--k-max must lie in 2..=20");
    }
    let opts = SweepOptions {
        element_cap: args.cap,
        build_limit: args.build_limit,
    };
    let rows = (2..=args.k_max)
        .into_par_iter()
        .map(|k| sweep_row(k, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let table = SweepJson {
        family: "cyclic-wreath".into(),
        strictly_decreasing: rows.windows(2).all(|w| w[0].ratio > w[1].ratio),
        rows: rows.iter().map(SweepRowJson::from).collect(),
    };
    if let Some(path) = &args.csv {
        let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        table.write_csv(f)?;
    }
    emit(&table, args.human, SweepJson::human)?;
    Ok(if table.strictly_decreasing {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn export_dot(args: &DotArgs) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let json: ConstructionJson =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", args.input.display()))?;
    let dot = json.to_poset()?.to_dot();
    match &args.out {
        Some(path) => {
            fs::write(path, dot).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{dot}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// 3 for resource caps, 2 for everything else.
fn failure_code(err: &anyhow::Error) -> u8 {
    let capped = err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<PermError>(),
            Some(PermError::CapExceeded { .. })
        ) || matches!(
            cause.downcast_ref::<AutError>(),
            Some(AutError::TooLarge { .. } | AutError::OrderOverflow)
        ) || cause
            .downcast_ref::<permposet::Error>()
            .is_some_and(permposet::Error::is_cap)
    });
    if capped {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
        Command::Size(a) => size(a),
        Command::Sweep(a) => sweep(a),
        Command::Lattice(a) => lattice(a),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(failure_code(&err))
        }
    }
}
