use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::checks::{applicable, check, check_perspective_iff_conconic, witnesses_for};
use super::generate::{gen_perspective_pair, generate, mutate};
use super::{fingerprint, Flavor, GeneratorSpec, Outcome, StatementId, Verdict};
use crate::config::ModeTag;
use crate::rng::SplitMix64;
use crate::{Configuration, GeomError};

/// Stream offset separating mutation draws from generation draws.
const CONTROL_STREAM: u64 = 64;

/// Statement column of a report line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellStatement {
    pub id: StatementId,
    /// Mutated instance: `PASS` means the mutation flipped the verdict.
    pub control: bool,
}

impl CellStatement {
    pub fn label(&self) -> String {
        if self.control {
            alloc::format!("control.{}", self.id.name())
        } else {
            String::from(self.id.name())
        }
    }
}

/// One report line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub mode: String,
    pub flavor: String,
    pub index: u64,
    pub statement: CellStatement,
    pub outcome: Outcome,
    pub fingerprint: u64,
}

impl Cell {
    pub fn line(&self) -> String {
        alloc::format!(
            "{}\t{}\t{}\t{}\t{}\t{:016x}",
            self.statement.label(),
            self.mode,
            self.flavor,
            self.index,
            self.outcome.label(),
            self.fingerprint
        )
    }
}

/// Generator health; kept out of the report body.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Health {
    pub instances: u64,
    pub rejections: u64,
    pub exhausted: u64,
    pub outside_traces: u64,
    /// Conic-first instances where the unclaimed feet statement held anyway.
    pub theorem2_exploratory_holds: u64,
    pub theorem2_exploratory_runs: u64,
}

impl Health {
    fn merge(&mut self, o: &Health) {
        self.instances += o.instances;
        self.rejections += o.rejections;
        self.exhausted += o.exhausted;
        self.outside_traces += o.outside_traces;
        self.theorem2_exploratory_holds += o.theorem2_exploratory_holds;
        self.theorem2_exploratory_runs += o.theorem2_exploratory_runs;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub cells: Vec<Cell>,
    pub health: Health,
}

/// Pass/fail/NA counts of one statement column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub na: u64,
}

impl SuiteReport {
    /// Associative, order-independent combination.
    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.cells.extend(other.cells);
        self.cells.sort();
        self.health.merge(&other.health);
        self
    }

    pub fn from_cells(mut cells: Vec<Cell>, health: Health) -> SuiteReport {
        cells.sort();
        SuiteReport { cells, health }
    }

    /// The line-oriented body: one line per cell, sorted by cell key.
    pub fn body(&self) -> String {
        let mut s = String::new();
        for c in &self.cells {
            s.push_str(&c.line());
            s.push('\n');
        }
        s
    }

    pub fn tally(&self) -> BTreeMap<String, Tally> {
        let mut m: BTreeMap<String, Tally> = BTreeMap::new();
        for c in &self.cells {
            let t = m.entry(c.statement.label()).or_default();
            match c.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => t.fail += 1,
                Outcome::NotApplicable => t.na += 1,
            }
        }
        m
    }

    pub fn fail_count(&self) -> usize {
        self.cells.iter().filter(|c| c.outcome == Outcome::Fail).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    /// Human-readable per-statement summary.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for (name, t) in self.tally() {
            let _ = writeln!(s, "{name}: {} pass, {} fail, {} n/a", t.pass, t.fail, t.na);
        }
        let h = &self.health;
        let _ = writeln!(
            s,
            "instances {}, rejected draws {}, exhausted {}, with outside traces {}",
            h.instances, h.rejections, h.exhausted, h.outside_traces
        );
        s
    }
}

fn cell(spec: &GeneratorSpec, index: u64, id: StatementId, control: bool, outcome: Outcome, fp: u64) -> Cell {
    Cell {
        mode: String::from(spec.mode.name()),
        flavor: String::from(spec.flavor.name()),
        index,
        statement: CellStatement { id, control },
        outcome,
        fingerprint: fp,
    }
}

/// Verdict of a statement; degeneracies of the checked objects count as
/// failures since the generator already filtered degenerate draws.
fn verdict_outcome(v: Result<Verdict, GeomError>) -> Outcome {
    match v {
        Ok(v) => v.outcome,
        Err(e) => {
            log::warn!("check raised {e}");
            Outcome::Fail
        }
    }
}

/// Control cell: `PASS` when the mutated instance fails the statement.
fn control_outcome(id: StatementId, mutated: &Configuration, claimed: ModeTag) -> Outcome {
    match witnesses_for(id, mutated, claimed) {
        Ok(ws) if ws.is_empty() => Outcome::NotApplicable,
        Ok(ws) if ws.iter().all(|w| num_traits::Zero::is_zero(&w.value)) => Outcome::Fail,
        Ok(_) => Outcome::Pass,
        // the mutated objects no longer exist: the claim cannot survive
        Err(_) => Outcome::Pass,
    }
}

/// All cells of one generated instance.
pub fn run_cell(spec: &GeneratorSpec, index: u64) -> SuiteReport {
    let mut health = Health { instances: 1, ..Health::default() };
    let mut cells = Vec::new();
    let g = match generate(spec, index) {
        Ok(g) => g,
        Err(e) => {
            log::warn!("{} {} #{index}: {e}", spec.mode.name(), spec.flavor.name());
            health.exhausted = 1;
            health.rejections = u64::from(super::MAX_REDRAWS);
            for id in StatementId::CONFIG_STATEMENTS {
                cells.push(cell(spec, index, id, false, Outcome::NotApplicable, 0));
            }
            return SuiteReport::from_cells(cells, health);
        }
    };
    let cfg = &g.config;
    let fp = fingerprint(cfg);
    health.rejections = u64::from(g.rejections);
    health.outside_traces = u64::from(cfg.has_outside_trace());

    for id in StatementId::CONFIG_STATEMENTS {
        cells.push(cell(spec, index, id, false, verdict_outcome(check(id, cfg)), fp));
    }
    if spec.flavor == Flavor::ConicFirst {
        // the feet statement is only proven with isogonal angles; record
        // whether it happens to hold here
        if let Ok(ws) = witnesses_for(StatementId::Theorem2, cfg, spec.mode) {
            health.theorem2_exploratory_runs = 1;
            let holds = ws.iter().all(|w| num_traits::Zero::is_zero(&w.value));
            health.theorem2_exploratory_holds = u64::from(holds);
            log::debug!("conic-first #{index}: feet statement holds = {holds}");
        }
    }

    if spec.controls {
        let mut rng = SplitMix64::for_cell(spec.seed, spec.stream() + CONTROL_STREAM, index);
        let claimed = match spec.flavor {
            Flavor::ConicFirst => ModeTag::Free,
            Flavor::TraceRandom => spec.mode,
        };
        let mutated = mutate(cfg, &mut rng);
        for id in StatementId::CONFIG_STATEMENTS {
            let outcome = match &mutated {
                _ if !applicable(id, claimed) => Outcome::NotApplicable,
                Ok(m) => control_outcome(id, m, claimed),
                Err(_) => Outcome::NotApplicable,
            };
            let mfp = mutated.as_ref().map(fingerprint).unwrap_or(0);
            cells.push(cell(spec, index, id, true, outcome, mfp));
        }
    }
    SuiteReport::from_cells(cells, health)
}

/// Every applicable check over `spec.count` instances, sequentially.
pub fn run_suite(spec: &GeneratorSpec) -> Result<SuiteReport, GeomError> {
    spec.validate()?;
    Ok((0..spec.count as u64).map(|i| run_cell(spec, i)).fold(SuiteReport::default(), SuiteReport::merge))
}

/// One perspective-statement cell: a perspective pair when `perspective`,
/// otherwise two independent random triangles.
pub fn run_pair_cell(seed: u64, index: u64, perspective: bool, bound: u32) -> SuiteReport {
    let flavor = if perspective { "perspective" } else { "random" };
    let mut health = Health { instances: 1, ..Health::default() };
    let (outcome, fp) = match gen_perspective_pair(seed, index, perspective, bound) {
        Ok((a, b)) => match check_perspective_iff_conconic(&a, &b) {
            Ok(v) => (v.outcome, v.fingerprint),
            Err(_) => (Outcome::Fail, 0),
        },
        Err(_) => {
            health.exhausted = 1;
            (Outcome::NotApplicable, 0)
        }
    };
    let c = Cell {
        mode: String::from("pair"),
        flavor: String::from(flavor),
        index,
        statement: CellStatement { id: StatementId::Perspective, control: false },
        outcome,
        fingerprint: fp,
    };
    SuiteReport::from_cells(alloc::vec![c], health)
}
