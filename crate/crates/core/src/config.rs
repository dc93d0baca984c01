//! The full derived configuration: six cevian lines, the hexagon they cut
//! out, the traces, the centers `R`, `R'`, `Q`, perpendicular feet and the
//! points of the lemma and the corollaries.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::triangle::{isogonal_trace, isotomic_trace, perpendicular_foot, Side, Trace, Triangle};
use crate::{join, meet, GeomError, ProjLine, ProjPoint};

const VERTEX: [&str; 3] = ["A", "B", "C"];
const HEX: [&str; 3] = ["X", "Y", "Z"];

/// One trace per sideline, indexed by the opposite vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSet([Trace; 3]);

impl TraceSet {
    pub fn new(a: Trace, b: Trace, c: Trace) -> Result<Self, GeomError> {
        if a.side() != Side::A || b.side() != Side::B || c.side() != Side::C {
            return Err(GeomError::NotOnSideline);
        }
        Ok(TraceSet([a, b, c]))
    }

    /// Convenience: integer weight pairs for sides `BC`, `CA`, `AB`.
    pub fn from_i64(w: [(i64, i64); 3]) -> Result<Self, GeomError> {
        Self::new(
            Trace::from_i64(Side::A, w[0].0, w[0].1)?,
            Trace::from_i64(Side::B, w[1].0, w[1].1)?,
            Trace::from_i64(Side::C, w[2].0, w[2].1)?,
        )
    }

    pub fn get(&self, side: Side) -> &Trace {
        &self.0[side.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Trace> {
        self.0.iter()
    }

    fn map(&self, f: impl Fn(&Trace) -> Trace) -> TraceSet {
        TraceSet(core::array::from_fn(|i| f(&self.0[i])))
    }
}

/// How the primed lines are derived from the unprimed ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Reflection in the angle bisectors.
    Isogonal,
    /// Reflection of traces in the side midpoints.
    Isotomic,
    /// An independent second set of traces.
    Free(TraceSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeTag {
    Isogonal,
    Isotomic,
    Free,
}

impl ModeTag {
    pub fn name(self) -> &'static str {
        match self {
            ModeTag::Isogonal => "isogonal",
            ModeTag::Isotomic => "isotomic",
            ModeTag::Free => "free",
        }
    }
}

impl Mode {
    pub fn tag(&self) -> ModeTag {
        match self {
            Mode::Isogonal => ModeTag::Isogonal,
            Mode::Isotomic => ModeTag::Isotomic,
            Mode::Free(_) => ModeTag::Free,
        }
    }
}

/// Perpendicular feet of the hexagon points on the sidelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feet {
    /// `H_A`, `H_B`, `H_C`: feet of `X`, `Y`, `Z` on `BC`, `CA`, `AB`.
    pub h: [ProjPoint; 3],
    /// `H'_A`, `H'_B`, `H'_C` from `X'`, `Y'`, `Z'`.
    pub h_prime: [ProjPoint; 3],
}

/// Points of the lemma and the two corollaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedPoints {
    /// `A'`, `B'`, `C'`: e.g. `C' = XY ∩ X'Y'`, which lies on `AB`.
    pub perspectrix: [ProjPoint; 3],
    /// `A2`, `B2`, `C2`: e.g. `A2 = C1B1 ∩ C1'B1'`, which lies on `XX'`.
    pub pappus: [ProjPoint; 3],
    /// `A3`, `B3`, `C3`: e.g. `A3 = A1C1' ∩ B1A1'`.
    pub pascal: [ProjPoint; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    triangle: Triangle,
    mode: Mode,
    traces: TraceSet,
    primed_traces: TraceSet,
    trace_points: [ProjPoint; 3],
    primed_trace_points: [ProjPoint; 3],
    lines: [ProjLine; 3],
    primed_lines: [ProjLine; 3],
    hexagon: [ProjPoint; 3],
    primed_hexagon: [ProjPoint; 3],
    r: ProjPoint,
    r_prime: ProjPoint,
    q: ProjPoint,
    feet: Option<Feet>,
}

fn degenerate(what: String) -> GeomError {
    GeomError::DegenerateConfiguration(what)
}

fn named_meet(l: &ProjLine, m: &ProjLine, what: impl FnOnce() -> String) -> Result<ProjPoint, GeomError> {
    meet(l, m).map_err(|_| degenerate(what()))
}

fn named_join(p: &ProjPoint, q: &ProjPoint, what: impl FnOnce() -> String) -> Result<ProjLine, GeomError> {
    join(p, q).map_err(|_| degenerate(what()))
}

/// Common point of the lines `p_k q_k`, allowing pairs that collapse to a
/// point: a collapsed pair contributes that point instead of a line.
fn common_point(pairs: &[(&ProjPoint, &ProjPoint)], label: &str) -> Result<ProjPoint, GeomError> {
    let mut lines: Vec<ProjLine> = Vec::new();
    let mut collapsed: Vec<&ProjPoint> = Vec::new();
    for (p, q) in pairs {
        match join(p, q) {
            Ok(l) => {
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
            Err(_) => collapsed.push(p),
        }
    }
    if lines.len() >= 2 {
        return Ok(meet(&lines[0], &lines[1]).expect("distinct lines"));
    }
    match (lines.first(), collapsed.first()) {
        (_, Some(&p)) => Ok(p.clone()),
        _ => Err(degenerate(format!("{label}: defining lines coincide"))),
    }
}

/// Builds every named object of the construction from three traces.
///
/// In the isogonal and isotomic modes the concurrences of `AX, BY, CZ`, of
/// `AX', BY', CZ'` and of `XX', YY', ZZ', RR'` are asserted; a failure there
/// is reported as [`GeomError::ConcurrencyViolation`].
pub fn build_configuration(triangle: Triangle, traces: TraceSet, mode: Mode) -> Result<Configuration, GeomError> {
    let primed_traces = match &mode {
        Mode::Isogonal => traces.map(|t| isogonal_trace(&triangle, t)),
        Mode::Isotomic => traces.map(isotomic_trace),
        Mode::Free(second) => second.clone(),
    };
    let trace_points: [ProjPoint; 3] = core::array::from_fn(|i| triangle.trace_point(&traces.0[i]));
    let primed_trace_points: [ProjPoint; 3] = core::array::from_fn(|i| triangle.trace_point(&primed_traces.0[i]));
    let line_through = |i: usize, t: &ProjPoint| join(triangle.vertex(i), t).map_err(|_| GeomError::TraceAtVertex);
    let lines = [line_through(0, &trace_points[0])?, line_through(1, &trace_points[1])?, line_through(2, &trace_points[2])?];
    let primed_lines = [
        line_through(0, &primed_trace_points[0])?,
        line_through(1, &primed_trace_points[1])?,
        line_through(2, &primed_trace_points[2])?,
    ];

    let mut hexagon = Vec::with_capacity(3);
    let mut primed_hexagon = Vec::with_capacity(3);
    for i in 0..3 {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        hexagon.push(named_meet(&lines[n], &primed_lines[p], || {
            format!("{}: l_{} and l'_{} coincide", HEX[i], VERTEX[n], VERTEX[p])
        })?);
        primed_hexagon.push(named_meet(&primed_lines[n], &lines[p], || {
            format!("{}': l'_{} and l_{} coincide", HEX[i], VERTEX[n], VERTEX[p])
        })?);
    }
    let hexagon: [ProjPoint; 3] = hexagon.try_into().expect("three points");
    let primed_hexagon: [ProjPoint; 3] = primed_hexagon.try_into().expect("three points");

    let asserted = matches!(mode, Mode::Isogonal | Mode::Isotomic);
    let center = |hex: &[ProjPoint; 3], name: &str| -> Result<ProjPoint, GeomError> {
        let cev: Vec<ProjLine> = (0..3)
            .map(|i| named_join(triangle.vertex(i), &hex[i], || format!("{}{}: points coincide", VERTEX[i], HEX[i])))
            .collect::<Result<_, _>>()?;
        let c = named_meet(&cev[0], &cev[1], || format!("{name}: cevians through A and B coincide"))?;
        if asserted && !c.lies_on(&cev[2]) {
            return Err(GeomError::ConcurrencyViolation(format!("{name} is not on the third cevian")));
        }
        Ok(c)
    };
    let r = center(&hexagon, "R")?;
    let r_prime = center(&primed_hexagon, "R'")?;

    let pairs = [
        (&hexagon[0], &primed_hexagon[0]),
        (&hexagon[1], &primed_hexagon[1]),
        (&hexagon[2], &primed_hexagon[2]),
        (&r, &r_prime),
    ];
    let q = common_point(&pairs, "Q")?;
    if asserted {
        for (p, pp) in pairs {
            if join(p, pp).is_ok_and(|l| !q.lies_on(&l)) {
                return Err(GeomError::ConcurrencyViolation(String::from("Q is not on all of XX', YY', ZZ', RR'")));
            }
        }
    }

    let mut cfg = Configuration {
        triangle,
        mode,
        traces,
        primed_traces,
        trace_points,
        primed_trace_points,
        lines,
        primed_lines,
        hexagon,
        primed_hexagon,
        r,
        r_prime,
        q,
        feet: None,
    };
    cfg.feet = h_points(&cfg).ok();
    Ok(cfg)
}

impl Configuration {
    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn traces(&self) -> &TraceSet {
        &self.traces
    }

    pub fn primed_traces(&self) -> &TraceSet {
        &self.primed_traces
    }

    /// `A1`, `B1`, `C1`.
    pub fn trace_points(&self) -> &[ProjPoint; 3] {
        &self.trace_points
    }

    /// `A1'`, `B1'`, `C1'`.
    pub fn primed_trace_points(&self) -> &[ProjPoint; 3] {
        &self.primed_trace_points
    }

    /// `l_A`, `l_B`, `l_C`.
    pub fn lines(&self) -> &[ProjLine; 3] {
        &self.lines
    }

    pub fn primed_lines(&self) -> &[ProjLine; 3] {
        &self.primed_lines
    }

    /// All six lines in the order `l_A, l'_A, l_B, l'_B, l_C, l'_C`.
    pub fn six_lines(&self) -> [ProjLine; 6] {
        core::array::from_fn(|k| if k % 2 == 0 { self.lines[k / 2].clone() } else { self.primed_lines[k / 2].clone() })
    }

    /// All six traces in the order `A1, A1', B1, B1', C1, C1'`.
    pub fn six_traces(&self) -> [ProjPoint; 6] {
        core::array::from_fn(|k| {
            if k % 2 == 0 {
                self.trace_points[k / 2].clone()
            } else {
                self.primed_trace_points[k / 2].clone()
            }
        })
    }

    /// `X`, `Y`, `Z`.
    pub fn hexagon(&self) -> &[ProjPoint; 3] {
        &self.hexagon
    }

    /// `X'`, `Y'`, `Z'`.
    pub fn primed_hexagon(&self) -> &[ProjPoint; 3] {
        &self.primed_hexagon
    }

    pub fn r(&self) -> &ProjPoint {
        &self.r
    }

    pub fn r_prime(&self) -> &ProjPoint {
        &self.r_prime
    }

    pub fn q(&self) -> &ProjPoint {
        &self.q
    }

    /// Present when every hexagon point is finite.
    pub fn feet(&self) -> Option<&Feet> {
        self.feet.as_ref()
    }

    /// The perspectrix point on the side opposite vertex `i`
    /// (`A' = YZ ∩ Y'Z'`, cyclically).
    pub fn perspectrix_point(&self, i: usize) -> Result<ProjPoint, GeomError> {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let (h, hp) = (&self.hexagon, &self.primed_hexagon);
        let tag = || format!("{}'", VERTEX[i]);
        let a = named_join(&h[n], &h[p], || format!("{}: {}{} undefined", tag(), HEX[n], HEX[p]))?;
        let b = named_join(&hp[n], &hp[p], || format!("{}: {}'{}' undefined", tag(), HEX[n], HEX[p]))?;
        named_meet(&a, &b, || format!("{}: {}{} and {}'{}' coincide", tag(), HEX[n], HEX[p], HEX[n], HEX[p]))
    }

    /// `A2 = C1B1 ∩ C1'B1'`, cyclically.
    pub fn pappus_point(&self, i: usize) -> Result<ProjPoint, GeomError> {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let (t, tp) = (&self.trace_points, &self.primed_trace_points);
        let a = named_join(&t[p], &t[n], || format!("{}2: traces coincide", VERTEX[i]))?;
        let b = named_join(&tp[p], &tp[n], || format!("{}2: primed traces coincide", VERTEX[i]))?;
        named_meet(&a, &b, || format!("{}2: {}1{}1 and {}1'{}1' coincide", VERTEX[i], VERTEX[p], VERTEX[n], VERTEX[p], VERTEX[n]))
    }

    /// `A3 = A1C1' ∩ B1A1'`, cyclically.
    pub fn pascal_point(&self, i: usize) -> Result<ProjPoint, GeomError> {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let (t, tp) = (&self.trace_points, &self.primed_trace_points);
        let a = named_join(&t[i], &tp[p], || format!("{}3: {}1 = {}1'", VERTEX[i], VERTEX[i], VERTEX[p]))?;
        let b = named_join(&t[n], &tp[i], || format!("{}3: {}1 = {}1'", VERTEX[i], VERTEX[n], VERTEX[i]))?;
        named_meet(&a, &b, || format!("{}3: {}1{}1' and {}1{}1' coincide", VERTEX[i], VERTEX[i], VERTEX[p], VERTEX[n], VERTEX[i]))
    }

    /// Whether any trace lies outside its closed side segment.
    pub fn has_outside_trace(&self) -> bool {
        self.traces.iter().chain(self.primed_traces.iter()).any(|t| !t.is_inside_segment())
    }
}

/// Feet of `X, Y, Z` on `BC, CA, AB` and of `X', Y', Z'` likewise.
pub fn h_points(cfg: &Configuration) -> Result<Feet, GeomError> {
    let foot = |p: &ProjPoint, i: usize| -> Result<ProjPoint, GeomError> {
        if !p.is_finite() {
            return Err(GeomError::HexagonPointAtInfinity);
        }
        perpendicular_foot(p, &cfg.triangle.sideline(Side::ALL[i]))
    };
    Ok(Feet {
        h: [foot(&cfg.hexagon[0], 0)?, foot(&cfg.hexagon[1], 1)?, foot(&cfg.hexagon[2], 2)?],
        h_prime: [foot(&cfg.primed_hexagon[0], 0)?, foot(&cfg.primed_hexagon[1], 1)?, foot(&cfg.primed_hexagon[2], 2)?],
    })
}

pub fn derived_points(cfg: &Configuration) -> Result<DerivedPoints, GeomError> {
    let all = |f: &dyn Fn(usize) -> Result<ProjPoint, GeomError>| -> Result<[ProjPoint; 3], GeomError> {
        Ok([f(0)?, f(1)?, f(2)?])
    };
    Ok(DerivedPoints {
        perspectrix: all(&|i| cfg.perspectrix_point(i))?,
        pappus: all(&|i| cfg.pappus_point(i))?,
        pascal: all(&|i| cfg.pascal_point(i))?,
    })
}
