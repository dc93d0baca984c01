//! Input documents and flag values: rationals as `p/q` or integer text.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use cevian_core::config::ModeTag;
use cevian_core::suite::Flavor;
use cevian_core::{Mode, Rat, Side, Trace, TraceSet, Triangle};
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::CliError;

/// A rational given either as a JSON integer or as `p/q` / integer text.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RatText {
    Int(i64),
    Text(String),
}

/// A value of `k`: a number, or text holding a decimal or a rational such as `1/3`.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum KText {
    Num(f64),
    Text(String),
}

/// The optional configuration file. Every field may be overridden by a flag.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// Three `[x, y]` vertices.
    pub triangle: Option<Vec<Vec<RatText>>>,
    /// Three `[u, v]` weight pairs on `BC`, `CA`, `AB`.
    pub traces: Option<Vec<Vec<RatText>>>,
    /// Second trace set, used in free mode.
    pub primed_traces: Option<Vec<Vec<RatText>>>,
    pub mode: Option<String>,
    pub flavor: Option<String>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub bound: Option<u32>,
    pub controls: Option<bool>,
    pub pairs: Option<usize>,
    pub k: Option<KText>,
    pub grid: Option<Vec<KText>>,
    pub curve: Option<String>,
    pub output: Option<PathBuf>,
    pub tolerance: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

pub fn parse_rat(text: &str, field: &str) -> Result<Rat, CliError> {
    Rat::from_str(text.trim()).map_err(|e| CliError::Usage(format!("{field}: malformed rational `{text}` ({e})")))
}

fn rat_of(v: &RatText, field: &str) -> Result<Rat, CliError> {
    match v {
        RatText::Int(i) => Ok(Rat::from_integer((*i).into())),
        RatText::Text(s) => parse_rat(s, field),
    }
}

pub fn k_of(v: &KText, field: &str) -> Result<f64, CliError> {
    match v {
        KText::Num(x) => Ok(*x),
        KText::Text(s) => {
            if let Ok(x) = s.trim().parse::<f64>() {
                return Ok(x);
            }
            let r = parse_rat(s, field)?;
            r.to_f64().ok_or_else(|| CliError::Usage(format!("{field}: `{s}` is out of range")))
        }
    }
}

/// Pairs of rationals, e.g. three vertices or three weight pairs.
pub fn pairs_of(rows: &[Vec<RatText>], field: &str) -> Result<[(Rat, Rat); 3], CliError> {
    if rows.len() != 3 {
        return Err(CliError::Usage(format!("{field}: expected 3 pairs, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(3);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != 2 {
            return Err(CliError::Usage(format!("{field}[{i}]: expected a pair, got {} values", row.len())));
        }
        out.push((rat_of(&row[0], &format!("{field}[{i}][0]"))?, rat_of(&row[1], &format!("{field}[{i}][1]"))?));
    }
    Ok(out.try_into().expect("three pairs"))
}

/// Flag syntax for three pairs: `x,y;x,y;x,y`.
pub fn parse_pairs_flag(text: &str) -> Vec<Vec<RatText>> {
    text.split(';')
        .map(|pair| pair.split(',').map(|s| RatText::Text(s.trim().to_string())).collect())
        .collect()
}

/// Flag syntax for a grid: comma-separated numbers or rationals.
pub fn parse_grid_flag(text: &str) -> Vec<KText> {
    if text.trim().is_empty() {
        return Vec::new();
    }
    text.split(',').map(|s| KText::Text(s.trim().to_string())).collect()
}

pub fn parse_mode(s: &str) -> Result<ModeTag, CliError> {
    match s {
        "isogonal" => Ok(ModeTag::Isogonal),
        "isotomic" => Ok(ModeTag::Isotomic),
        "free" => Ok(ModeTag::Free),
        other => Err(CliError::Usage(format!("mode: unknown mode `{other}` (isogonal, isotomic, free)"))),
    }
}

pub fn parse_flavor(s: &str) -> Result<Flavor, CliError> {
    match s {
        "trace" => Ok(Flavor::TraceRandom),
        "conic-first" => Ok(Flavor::ConicFirst),
        other => Err(CliError::Usage(format!("flavor: unknown flavor `{other}` (trace, conic-first)"))),
    }
}

pub const SAMPLE_TRIANGLE: [(i64, i64); 3] = [(0, 0), (1, 0), (0, 1)];
pub const SAMPLE_TRACES: [(i64, i64); 3] = [(1, 2), (1, 2), (1, 2)];

fn default_rows(v: [(i64, i64); 3]) -> Vec<Vec<RatText>> {
    v.iter().map(|&(a, b)| vec![RatText::Int(a), RatText::Int(b)]).collect()
}

/// Exact inputs of `construct` and `figure`.
#[derive(Clone, Debug)]
pub struct ExactInput {
    pub triangle: Triangle,
    pub traces: TraceSet,
    pub mode: Mode,
}

fn trace_set(w: [(Rat, Rat); 3]) -> Result<TraceSet, CliError> {
    let [a, b, c] = w;
    Ok(TraceSet::new(
        Trace::new(Side::A, a.0, a.1)?,
        Trace::new(Side::B, b.0, b.1)?,
        Trace::new(Side::C, c.0, c.1)?,
    )?)
}

/// Validates rationals first (exit 2), then geometry (exit 3).
pub fn exact_input(
    triangle: Option<&Vec<Vec<RatText>>>,
    traces: Option<&Vec<Vec<RatText>>>,
    primed: Option<&Vec<Vec<RatText>>>,
    mode: ModeTag,
) -> Result<ExactInput, CliError> {
    let tri_rows = triangle.cloned().unwrap_or_else(|| default_rows(SAMPLE_TRIANGLE));
    let trace_rows = traces.cloned().unwrap_or_else(|| default_rows(SAMPLE_TRACES));
    let v = pairs_of(&tri_rows, "triangle")?;
    let w = pairs_of(&trace_rows, "traces")?;
    let p = match (mode, primed) {
        (ModeTag::Free, Some(rows)) => Some(pairs_of(rows, "primed_traces")?),
        (ModeTag::Free, None) => return Err(CliError::Usage("primed_traces: required in free mode".into())),
        (_, Some(_)) => return Err(CliError::Usage("primed_traces: only used in free mode".into())),
        (_, None) => None,
    };
    let [a, b, c] = v;
    let triangle = Triangle::new(a, b, c)?;
    let traces = trace_set(w)?;
    let mode = match mode {
        ModeTag::Isogonal => Mode::Isogonal,
        ModeTag::Isotomic => Mode::Isotomic,
        ModeTag::Free => Mode::Free(trace_set(p.expect("checked above"))?),
    };
    Ok(ExactInput { triangle, traces, mode })
}

/// Floating vertices for the angle family.
pub fn float_triangle(triangle: Option<&Vec<Vec<RatText>>>) -> Result<[[f64; 2]; 3], CliError> {
    let rows = triangle.cloned().unwrap_or_else(|| default_rows(SAMPLE_TRIANGLE));
    let v = pairs_of(&rows, "triangle")?;
    let f = |r: &Rat| r.to_f64().unwrap_or(f64::NAN);
    Ok([[f(&v[0].0), f(&v[0].1)], [f(&v[1].0), f(&v[1].1)], [f(&v[2].0), f(&v[2].1)]])
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn rat_text(r: &Rat) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) || r.is_zero() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
