//! Argument parsing and the four commands.

use std::io::Write;
use std::path::{Path, PathBuf};

use cevian_core::config::ModeTag;
use cevian_core::morley::{NumTri, TAU};
use cevian_core::suite::{Flavor, GeneratorSpec, DEFAULT_BOUND};
use cevian_core::build_configuration;
use clap::{Parser, Subcommand};

use crate::family::{self, Curve};
use crate::input::{self, FileConfig, RatText};
use crate::runner;
use crate::{construct, svg, CliError};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_COUNT: usize = 100;

#[derive(Debug, Parser)]
#[command(name = "cevian", version, about = "Exact checks, constructions and figures for cevian configurations")]
pub struct Args {
    /// JSON configuration file; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the theorem suite over generated instances and write the report.
    Verify(VerifyArgs),
    /// Write every named object of one configuration as JSON.
    Construct(ExactArgs),
    /// Sample a curve of the angle family as CSV.
    Family(FamilyArgs),
    /// Draw one configuration as SVG.
    Figure(ExactArgs),
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Seed; falls back to the config file, then to $CEVIAN_SEED.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub count: Option<usize>,
    /// isogonal, isotomic or free.
    #[arg(long)]
    pub mode: Option<String>,
    /// trace or conic-first. Defaults to conic-first in free mode.
    #[arg(long)]
    pub flavor: Option<String>,
    /// Height bound of the random rationals.
    #[arg(long)]
    pub bound: Option<u32>,
    /// Add a mutated negative control per instance.
    #[arg(long)]
    pub controls: bool,
    /// Also check this many perspective pairs and as many random pairs.
    #[arg(long)]
    pub pairs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ExactArgs {
    /// Vertices as `x,y;x,y;x,y`.
    #[arg(long)]
    pub triangle: Option<String>,
    /// Weights `u,v` on BC, CA, AB as `u,v;u,v;u,v`.
    #[arg(long)]
    pub traces: Option<String>,
    /// Second trace set (free mode only).
    #[arg(long)]
    pub primed_traces: Option<String>,
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub triangle: Option<String>,
    /// Comma-separated values of k in [-1, 1]; empty for anchors only.
    #[arg(long)]
    pub grid: Option<String>,
    /// A single extra value of k.
    #[arg(long)]
    pub k: Option<String>,
    /// r, d or q.
    #[arg(long)]
    pub curve: Option<String>,
    /// Fail when the line construction of R drifts from the closed form.
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &Args) -> Result<(), CliError> {
    let file = match &args.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    match &args.command {
        Command::Verify(v) => verify(v, &file),
        Command::Construct(a) => {
            let cfg = exact_config(a, &file)?;
            emit(out_path(&a.out, &file), &construct::render(&cfg))
        }
        Command::Family(f) => family_cmd(f, &file),
        Command::Figure(a) => {
            let cfg = exact_config(a, &file)?;
            emit(out_path(&a.out, &file), &svg::render(&cfg))
        }
    }
}

fn out_path<'a>(flag: &'a Option<PathBuf>, file: &'a FileConfig) -> Option<&'a Path> {
    flag.as_deref().or(file.output.as_deref())
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn env_seed() -> Result<Option<u64>, CliError> {
    match std::env::var("CEVIAN_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("CEVIAN_SEED: `{s}` is not an unsigned integer"))),
        Err(_) => Ok(None),
    }
}

fn mode_of(flag: &Option<String>, file: &FileConfig) -> Result<Option<ModeTag>, CliError> {
    flag.as_deref().or(file.mode.as_deref()).map(input::parse_mode).transpose()
}

fn verify(v: &VerifyArgs, file: &FileConfig) -> Result<(), CliError> {
    let seed = match v.seed.or(file.seed) {
        Some(s) => s,
        None => env_seed()?.unwrap_or(DEFAULT_SEED),
    };
    let count = v.count.or(file.count).unwrap_or(DEFAULT_COUNT);
    let flavor = v.flavor.as_deref().or(file.flavor.as_deref()).map(input::parse_flavor).transpose()?;
    let mode = match (mode_of(&v.mode, file)?, flavor) {
        (Some(m), _) => m,
        (None, Some(Flavor::ConicFirst)) => ModeTag::Free,
        (None, _) => ModeTag::Isogonal,
    };
    let flavor = flavor.unwrap_or(if mode == ModeTag::Free { Flavor::ConicFirst } else { Flavor::TraceRandom });
    let mut spec = GeneratorSpec::new(seed, count, mode, flavor);
    spec.bound = v.bound.or(file.bound).unwrap_or(DEFAULT_BOUND);
    spec.controls = v.controls || file.controls.unwrap_or(false);
    let pairs = v.pairs.or(file.pairs).unwrap_or(0);

    let (report, elapsed) = runner::timed(|| -> Result<_, CliError> {
        let mut report = runner::run_parallel(&spec)?;
        if pairs > 0 {
            report = report.merge(runner::run_pairs(seed, pairs, spec.bound));
        }
        Ok(report)
    });
    let report = report?;
    emit(out_path(&v.out, file), &report.body())?;
    eprint!("{}", report.summary());
    let h = &report.health;
    if h.theorem2_exploratory_runs > 0 {
        eprintln!(
            "feet statement outside the isogonal case held in {} of {} instances",
            h.theorem2_exploratory_holds, h.theorem2_exploratory_runs
        );
    }
    eprintln!("seed {seed}, wall time {:.3} s", elapsed.as_secs_f64());
    for c in report.failures().take(20) {
        log::error!("{}", c.line());
    }
    match report.fail_count() {
        0 => Ok(()),
        n => Err(CliError::Failures(n)),
    }
}

fn pairs_arg(flag: &Option<String>, file: &Option<Vec<Vec<RatText>>>) -> Option<Vec<Vec<RatText>>> {
    match flag {
        Some(text) => Some(input::parse_pairs_flag(text)),
        None => file.clone(),
    }
}

fn exact_config(a: &ExactArgs, file: &FileConfig) -> Result<cevian_core::Configuration, CliError> {
    let mode = mode_of(&a.mode, file)?.unwrap_or(ModeTag::Isogonal);
    let triangle = pairs_arg(&a.triangle, &file.triangle);
    let traces = pairs_arg(&a.traces, &file.traces);
    let primed = pairs_arg(&a.primed_traces, &file.primed_traces);
    let inp = input::exact_input(triangle.as_ref(), traces.as_ref(), primed.as_ref(), mode)?;
    Ok(build_configuration(inp.triangle, inp.traces, inp.mode)?)
}

fn family_cmd(f: &FamilyArgs, file: &FileConfig) -> Result<(), CliError> {
    let rows = pairs_arg(&f.triangle, &file.triangle);
    let [a, b, c] = input::float_triangle(rows.as_ref())?;
    let tri = NumTri::new(a, b, c)?;
    let mut grid: Vec<f64> = match (&f.grid, &file.grid) {
        (Some(text), _) => input::parse_grid_flag(text)
            .iter()
            .enumerate()
            .map(|(i, k)| input::k_of(k, &format!("grid[{i}]")))
            .collect::<Result<_, _>>()?,
        (None, Some(g)) => g
            .iter()
            .enumerate()
            .map(|(i, k)| input::k_of(k, &format!("grid[{i}]")))
            .collect::<Result<_, _>>()?,
        (None, None) => family::default_grid(),
    };
    match (&f.k, &file.k) {
        (Some(text), _) => grid.push(input::k_of(&input::KText::Text(text.clone()), "k")?),
        (None, Some(k)) => grid.push(input::k_of(k, "k")?),
        (None, None) => {}
    }
    let curve_name = f.curve.as_deref().or(file.curve.as_deref()).unwrap_or("r");
    let curve = Curve::parse(curve_name)
        .ok_or_else(|| CliError::Usage(format!("curve: unknown curve `{curve_name}` (r, d, q)")))?;
    let csv = family::csv(&tri, &grid, curve)?;
    emit(out_path(&f.out, file), &csv)?;
    if f.check {
        let tol = f.tolerance.or(file.tolerance).unwrap_or(TAU);
        let dev = family::construction_deviation(&tri, &family::full_grid(&grid)?);
        eprintln!("largest deviation of the constructed R from the closed form: {dev:.3e}");
        if dev > tol {
            return Err(CliError::Failures(1));
        }
    }
    Ok(())
}
