//! Executable theorem statements, seeded generators of exact
//! configurations, and batch verification.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::config::ModeTag;
use crate::{Configuration, GeomError, ProjPoint, Triangle};

mod checks;
mod generate;
mod report;

pub use checks::*;
pub use generate::*;
pub use report::*;

/// Default numerator/denominator bound of the random rationals.
pub const DEFAULT_BOUND: u32 = 20;

/// Redraws allowed before a generator gives up.
pub const MAX_REDRAWS: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatementId {
    /// `AX`, `BY`, `CZ` concur (and the primed triple).
    Theorem1,
    /// The six cevian lines touch one conic.
    TangentConic,
    /// `AH_A`, `BH_B`, `CH_C` concur; the six feet are conconic.
    Theorem2,
    /// `XX'`, `YY'`, `ZZ'`, `RR'` concur; lemma and perspectrix.
    Theorem3,
    /// The six traces are conconic (determinant and ratio criterion).
    Theorem4,
    /// Tangent lines ⇔ conconic traces, both directions.
    Biconditional,
    /// `A2` on `XX'` and the Pappus lines concur.
    Corollary1,
    /// `AA3`, `BB3`, `CC3` concur.
    Corollary2,
    /// `R'` is the isogonal (isotomic) conjugate of `R`.
    ConjugateCenters,
    /// Two triangles are perspective iff the six cross points are conconic.
    Perspective,
}

impl StatementId {
    /// Statements evaluated on every configuration, in report order.
    pub const CONFIG_STATEMENTS: [StatementId; 9] = [
        StatementId::Theorem1,
        StatementId::TangentConic,
        StatementId::Theorem2,
        StatementId::Theorem3,
        StatementId::Theorem4,
        StatementId::Biconditional,
        StatementId::Corollary1,
        StatementId::Corollary2,
        StatementId::ConjugateCenters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatementId::Theorem1 => "theorem1",
            StatementId::TangentConic => "tangent_conic",
            StatementId::Theorem2 => "theorem2",
            StatementId::Theorem3 => "theorem3",
            StatementId::Theorem4 => "theorem4",
            StatementId::Biconditional => "biconditional",
            StatementId::Corollary1 => "corollary1",
            StatementId::Corollary2 => "corollary2",
            StatementId::ConjugateCenters => "conjugate_centers",
            StatementId::Perspective => "perspective",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::NotApplicable => "NA",
        }
    }
}

/// A named exact value that must vanish for the statement to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub name: &'static str,
    pub value: BigInt,
}

/// Outcome of checking one statement on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub statement: StatementId,
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
    pub fingerprint: u64,
    /// `None` for verdicts about triangle pairs.
    pub mode: Option<ModeTag>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn witness(&self, name: &str) -> Option<&BigInt> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| &w.value)
    }

    pub fn all_witnesses_zero(&self) -> bool {
        self.witnesses.iter().all(|w| w.value.is_zero())
    }

    pub(crate) fn from_witnesses(statement: StatementId, cfg: &Configuration, witnesses: Vec<Witness>) -> Verdict {
        let outcome = if witnesses.iter().all(|w| w.value.is_zero()) { Outcome::Pass } else { Outcome::Fail };
        Verdict { statement, outcome, witnesses, fingerprint: fingerprint(cfg), mode: Some(cfg.mode().tag()) }
    }

    pub(crate) fn not_applicable(statement: StatementId, cfg: &Configuration) -> Verdict {
        Verdict {
            statement,
            outcome: Outcome::NotApplicable,
            witnesses: Vec::new(),
            fingerprint: fingerprint(cfg),
            mode: Some(cfg.mode().tag()),
        }
    }
}

/// How configurations are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Random triangle and random traces.
    TraceRandom,
    /// Six tangents of the unit circle; vertices are meets of tangent pairs.
    ConicFirst,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::TraceRandom => "trace",
            Flavor::ConicFirst => "conic-first",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub count: usize,
    pub bound: u32,
    pub mode: ModeTag,
    pub flavor: Flavor,
    /// Also evaluate the mutation controls for each instance.
    pub controls: bool,
}

impl GeneratorSpec {
    pub fn new(seed: u64, count: usize, mode: ModeTag, flavor: Flavor) -> Self {
        GeneratorSpec { seed, count, bound: DEFAULT_BOUND, mode, flavor, controls: false }
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if self.bound < 2 {
            return Err(GeomError::InvalidSpec(String::from("bound must be at least 2")));
        }
        if self.flavor == Flavor::ConicFirst && self.mode != ModeTag::Free {
            return Err(GeomError::InvalidSpec(String::from("conic-first configurations are built in free mode")));
        }
        Ok(())
    }

    /// Stream id separating the random draws of different mode/flavor cells.
    pub(crate) fn stream(&self) -> u64 {
        let m = match self.mode {
            ModeTag::Isogonal => 1,
            ModeTag::Isotomic => 2,
            ModeTag::Free => 3,
        };
        let f = match self.flavor {
            Flavor::TraceRandom => 0,
            Flavor::ConicFirst => 16,
        };
        m + f
    }
}

/// 64-bit FNV-1a.
#[derive(Clone, Copy)]
pub struct Fnv1a(u64);

impl Fnv1a {
    pub fn new() -> Self {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    pub fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 ^= u64::from(*b);
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    pub fn write_int(&mut self, x: &BigInt) {
        let bytes = x.to_signed_bytes_le();
        self.write(&(bytes.len() as u32).to_le_bytes());
        self.write(&bytes);
    }

    pub fn write_point(&mut self, p: &ProjPoint) {
        for c in p.coords() {
            self.write_int(c);
        }
    }

    pub fn finish(self) -> u64 {
        self.0
    }
}

impl Default for Fnv1a {
    fn default() -> Self {
        Self::new()
    }
}

/// Hash of the canonical coordinates of the triangle and the six traces.
pub fn fingerprint(cfg: &Configuration) -> u64 {
    let mut h = Fnv1a::new();
    h.write(cfg.mode().tag().name().as_bytes());
    for v in cfg.triangle().vertices() {
        h.write_point(v);
    }
    for t in cfg.six_traces() {
        h.write_point(&t);
    }
    h.finish()
}

pub fn pair_fingerprint(a: &Triangle, b: &Triangle) -> u64 {
    let mut h = Fnv1a::new();
    h.write(b"pair");
    for v in a.vertices().iter().chain(b.vertices()) {
        h.write_point(v);
    }
    h.finish()
}
