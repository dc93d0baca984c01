//! The angle-parametrized family: lines through each vertex making the
//! angle `k·∠A` (`k·∠B`, `k·∠C`) with one side and the same angle with the
//! other. Angles are irrational in general, so this module works in `f64`
//! and compares sum-normalized barycentrics with a tolerance.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{atan2, cos, fabs, sin, sqrt, tan};

use crate::rng::SplitMix64;

/// Default comparison tolerance on sum-normalized barycentrics.
pub const TAU: f64 = 1e-9;

/// Half-width of the windows around `k = 0` and `k = 1` where the closed
/// limits replace the removable singularities of the formula.
pub const LIMIT_WINDOW: f64 = 1e-7;

/// Distance to `π/2` at which `tan(k·angle)` counts as a pole.
pub const POLE_WINDOW: f64 = 1e-9;

/// Smallest angle (radians) below which the trisector construction is
/// reported as ill-conditioned.
pub const THIN_ANGLE: f64 = 1e-2;

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum MorleyError {
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("k = {0} is outside [-1, 1]")]
    InvalidK(f64),
    #[error("tan(k·angle) has a pole at k = {0}")]
    TangentPole(f64),
    #[error("a rotated line is parallel to the line it must meet (k = {0})")]
    RayMiss(f64),
    #[error("point is at infinity")]
    AtInfinity,
    #[error("vertex joins of the Morley triangle do not concur (spread {0:e})")]
    PerspectorNotFound(f64),
}

type Pt = [f64; 2];

fn sub(p: Pt, q: Pt) -> Pt {
    [p[0] - q[0], p[1] - q[1]]
}

fn cross2(u: Pt, v: Pt) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

fn dot2(u: Pt, v: Pt) -> f64 {
    u[0] * v[0] + u[1] * v[1]
}

fn norm(u: Pt) -> f64 {
    sqrt(dot2(u, u))
}

fn rotate(u: Pt, theta: f64) -> Pt {
    let (s, c) = (sin(theta), cos(theta));
    [c * u[0] - s * u[1], s * u[0] + c * u[1]]
}

fn unit(u: Pt) -> Pt {
    let n = norm(u);
    [u[0] / n, u[1] / n]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn line_through(p: Pt, dir: Pt) -> [f64; 3] {
    cross3([p[0], p[1], 1.0], [p[0] + dir[0], p[1] + dir[1], 1.0])
}

fn meet(l: [f64; 3], m: [f64; 3]) -> Option<Pt> {
    let h = cross3(l, m);
    let scale = fabs(h[0]) + fabs(h[1]);
    if !(fabs(h[2]) > 1e-12 * scale) {
        return None;
    }
    Some([h[0] / h[2], h[1] / h[2]])
}

/// Triangle with `f64` vertices and its angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumTri {
    vertices: [Pt; 3],
    angles: [f64; 3],
}

impl NumTri {
    pub fn new(a: Pt, b: Pt, c: Pt) -> Result<Self, MorleyError> {
        let vertices = [a, b, c];
        if vertices.iter().flatten().any(|x| !x.is_finite()) {
            return Err(MorleyError::DegenerateTriangle);
        }
        let area2 = cross2(sub(b, a), sub(c, a));
        let scale = norm(sub(b, a)).max(norm(sub(c, a))).max(norm(sub(c, b)));
        if !(fabs(area2) > 1e-14 * scale * scale) {
            return Err(MorleyError::DegenerateTriangle);
        }
        let angles: [f64; 3] = core::array::from_fn(|i| {
            let p = vertices[i];
            let u = sub(vertices[(i + 1) % 3], p);
            let v = sub(vertices[(i + 2) % 3], p);
            atan2(fabs(cross2(u, v)), dot2(u, v))
        });
        let sum: f64 = angles.iter().sum();
        if angles.iter().any(|&x| x <= 0.0) || fabs(sum - PI) > 1e-12 {
            return Err(MorleyError::DegenerateTriangle);
        }
        Ok(NumTri { vertices, angles })
    }

    /// Equilateral triangle with unit side.
    pub fn equilateral() -> Self {
        NumTri::new([0.0, 0.0], [1.0, 0.0], [0.5, sqrt(3.0) / 2.0]).expect("proper triangle")
    }

    pub fn vertices(&self) -> &[Pt; 3] {
        &self.vertices
    }

    pub fn angles(&self) -> [f64; 3] {
        self.angles
    }

    /// Lengths `a, b, c` of the sides opposite `A, B, C`.
    pub fn sides(&self) -> [f64; 3] {
        core::array::from_fn(|i| norm(sub(self.vertices[(i + 2) % 3], self.vertices[(i + 1) % 3])))
    }

    /// `+1` when the vertices run counterclockwise.
    fn orientation(&self) -> f64 {
        let [a, b, c] = self.vertices;
        if cross2(sub(b, a), sub(c, a)) > 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn to_bary(&self, p: Pt) -> Result<NumBary, MorleyError> {
        let [a, b, c] = self.vertices;
        let w = [cross2(sub(b, p), sub(c, p)), cross2(sub(c, p), sub(a, p)), cross2(sub(a, p), sub(b, p))];
        NumBary::new(w)
    }

    pub fn to_cartesian(&self, b: &NumBary) -> Pt {
        let [x, y, z] = b.coords();
        let [a, bb, c] = self.vertices;
        [x * a[0] + y * bb[0] + z * c[0], x * a[1] + y * bb[1] + z * c[1]]
    }

    pub fn is_right(&self) -> bool {
        self.angles.iter().any(|&x| fabs(x - FRAC_PI_2) < POLE_WINDOW)
    }
}

/// Barycentrics normalized to `x + y + z = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumBary([f64; 3]);

impl NumBary {
    /// Normalizes `w`; fails when the sum vanishes (a point at infinity).
    pub fn new(w: [f64; 3]) -> Result<Self, MorleyError> {
        let s = w[0] + w[1] + w[2];
        let m = fabs(w[0]).max(fabs(w[1])).max(fabs(w[2]));
        if !s.is_finite() || !m.is_finite() || !(fabs(s) > 1e-14 * m) {
            return Err(MorleyError::AtInfinity);
        }
        Ok(NumBary([w[0] / s, w[1] / s, w[2] / s]))
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    pub fn max_diff(&self, o: &NumBary) -> f64 {
        (0..3).map(|i| fabs(self.0[i] - o.0[i])).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, o: &NumBary, tol: f64) -> bool {
        self.max_diff(o) <= tol
    }
}

/// `k ∈ [-1, 1]`; positive values put the lines inside the angles.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct KParam(f64);

impl KParam {
    pub fn new(k: f64) -> Result<Self, MorleyError> {
        if !(-1.0..=1.0).contains(&k) {
            return Err(MorleyError::InvalidK(k));
        }
        Ok(KParam(k))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `R(0) = (∠A : ∠B : ∠C)`, also the limit of `D(k)` at zero.
pub fn r_zero(tri: &NumTri) -> NumBary {
    NumBary::new(tri.angles).expect("positive angles")
}

/// `R(1) = (sin²∠A/∠A : …)`, the isogonal conjugate of `R(0)`.
pub fn r_one(tri: &NumTri) -> NumBary {
    NumBary::new(tri.angles.map(|x| sin(x) * sin(x) / x)).expect("positive weights")
}

/// Concurrence point of the `k`-lines:
/// `(sin∠A·sin(k∠A)/sin((1-k)∠A) : …)`.
pub fn r_of_k(tri: &NumTri, k: KParam) -> Result<NumBary, MorleyError> {
    let k = k.0;
    if fabs(k) < LIMIT_WINDOW {
        return Ok(r_zero(tri));
    }
    if fabs(1.0 - k) < LIMIT_WINDOW {
        return Ok(r_one(tri));
    }
    let den = tri.angles.map(|x| sin((1.0 - k) * x));
    if den.iter().any(|&d| fabs(d) < POLE_WINDOW) {
        return Err(MorleyError::AtInfinity);
    }
    NumBary::new(core::array::from_fn(|i| sin(tri.angles[i]) * sin(k * tri.angles[i]) / den[i]))
}

/// Concurrence point of the lines from the vertices to the feet of the
/// hexagon points: `(tan(k∠A) : tan(k∠B) : tan(k∠C))`.
pub fn d_of_k(tri: &NumTri, k: KParam) -> Result<NumBary, MorleyError> {
    let k = k.0;
    if tri.angles.iter().any(|&x| fabs(fabs(k * x) - FRAC_PI_2) < POLE_WINDOW) {
        return Err(MorleyError::TangentPole(k));
    }
    if fabs(k) < LIMIT_WINDOW {
        return Ok(r_zero(tri));
    }
    NumBary::new(tri.angles.map(|x| tan(k * x)))
}

/// The `k`-configuration built with floating-point lines.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericConfig {
    pub k: f64,
    /// `l_A, l_B, l_C` as homogeneous line coordinates.
    pub lines: [[f64; 3]; 3],
    pub primed_lines: [[f64; 3]; 3],
    /// `X = l_B ∩ l'_C`, `Y = l_C ∩ l'_A`, `Z = l_A ∩ l'_B`.
    pub hexagon: [Pt; 3],
    pub primed_hexagon: [Pt; 3],
    pub r: Pt,
    pub r_prime: Pt,
    pub q: Pt,
}

/// Relative distance below which two constructed points count as one.
const COLLAPSE: f64 = 1e-12;

fn close(p: Pt, q: Pt, scale: f64) -> bool {
    norm(sub(p, q)) <= COLLAPSE * scale
}

/// `l_A` makes angle `k∠A` with `AB`, `l_B` with `BC`, `l_C` with `CA`;
/// the primed lines make the same angles with `AC`, `BA`, `CB`.
pub fn build_numeric_config(tri: &NumTri, k: KParam) -> Result<NumericConfig, MorleyError> {
    let k = k.0;
    if k <= -1.0 || k >= 1.0 || k == 0.0 {
        return Err(MorleyError::InvalidK(k));
    }
    let v = tri.vertices;
    let s = tri.orientation();
    let scale = tri.sides().iter().fold(0.0f64, |m, &x| m.max(x));
    let mut lines = [[0.0; 3]; 3];
    let mut primed = [[0.0; 3]; 3];
    for i in 0..3 {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let theta = k * tri.angles[i];
        // rotating the direction of side i→n by +s turns it toward vertex p
        lines[i] = line_through(v[i], rotate(unit(sub(v[n], v[i])), s * theta));
        primed[i] = line_through(v[i], rotate(unit(sub(v[p], v[i])), -s * theta));
    }
    let mut hexagon = [[0.0; 2]; 3];
    let mut primed_hexagon = [[0.0; 2]; 3];
    for i in 0..3 {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        hexagon[i] = meet(lines[n], primed[p]).ok_or(MorleyError::RayMiss(k))?;
        primed_hexagon[i] = meet(primed[n], lines[p]).ok_or(MorleyError::RayMiss(k))?;
    }
    let center = |hex: &[Pt; 3]| -> Result<Pt, MorleyError> {
        let a = line_through(v[0], sub(hex[0], v[0]));
        let b = line_through(v[1], sub(hex[1], v[1]));
        meet(a, b).ok_or(MorleyError::AtInfinity)
    };
    let r = center(&hexagon)?;
    let r_prime = center(&primed_hexagon)?;

    let pairs = [(hexagon[0], primed_hexagon[0]), (hexagon[1], primed_hexagon[1]), (hexagon[2], primed_hexagon[2]), (r, r_prime)];
    let mut joins = Vec::new();
    let mut collapsed = None;
    for (p, q) in pairs {
        if close(p, q, scale) {
            collapsed.get_or_insert(p);
        } else {
            joins.push(line_through(p, sub(q, p)));
        }
    }
    let q = match (collapsed, joins.len()) {
        (Some(p), _) => p,
        (None, n) if n >= 2 => {
            // the best-conditioned pair of lines
            let mut best: Option<(f64, Pt)> = None;
            for i in 0..n {
                for j in i + 1..n {
                    let h = cross3(joins[i], joins[j]);
                    let quality = fabs(h[2]) / (sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]) + f64::MIN_POSITIVE);
                    if let Some(p) = meet(joins[i], joins[j]) {
                        if best.map_or(true, |(b, _)| quality > b) {
                            best = Some((quality, p));
                        }
                    }
                }
            }
            best.ok_or(MorleyError::AtInfinity)?.1
        }
        _ => return Err(MorleyError::AtInfinity),
    };
    Ok(NumericConfig { k, lines, primed_lines: primed, hexagon, primed_hexagon, r, r_prime, q })
}

/// `Q(k)`, the common point of `XX'`, `YY'`, `ZZ'`, `RR'`; it has no known
/// closed form. At `k = 0` and `k = 1` (where the lines collapse onto the
/// sides) the limits `R(0)` and `R(1)` are returned.
pub fn q_of_k(tri: &NumTri, k: KParam) -> Result<NumBary, MorleyError> {
    if fabs(k.0) < LIMIT_WINDOW {
        return Ok(r_zero(tri));
    }
    if fabs(1.0 - k.0) < LIMIT_WINDOW {
        return Ok(r_one(tri));
    }
    let cfg = build_numeric_config(tri, k)?;
    tri.to_bary(cfg.q)
}

/// The three adjacent-trisector intersections, opposite `A`, `B`, `C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MorleyTriangle {
    pub points: [Pt; 3],
    /// Set when an angle is below [`THIN_ANGLE`].
    pub ill_conditioned: bool,
}

impl MorleyTriangle {
    /// Largest relative deviation of a side length from the mean side.
    pub fn equilateral_defect(&self) -> f64 {
        let p = self.points;
        let s = [norm(sub(p[1], p[2])), norm(sub(p[2], p[0])), norm(sub(p[0], p[1]))];
        let mean = (s[0] + s[1] + s[2]) / 3.0;
        s.iter().map(|x| fabs(x - mean) / mean).fold(0.0, f64::max)
    }
}

/// Morley triangle by the law of sines: the trisectors of `B` and `C`
/// adjacent to `BC` meet at distance `a·sin(C/3)/sin((B+C)/3)` from `B`.
pub fn morley_triangle(tri: &NumTri) -> MorleyTriangle {
    let v = tri.vertices;
    let ang = tri.angles;
    let sides = tri.sides();
    let s = tri.orientation();
    let points = core::array::from_fn(|i| {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let (bn, bp) = (ang[n] / 3.0, ang[p] / 3.0);
        let dist = sides[i] * sin(bp) / sin(bn + bp);
        // side n→p turned toward vertex i, which lies on its left when s > 0
        let d = rotate(unit(sub(v[p], v[n])), s * bn);
        [v[n][0] + dist * d[0], v[n][1] + dist * d[1]]
    });
    let ill_conditioned = ang.iter().any(|&x| x < THIN_ANGLE);
    if ill_conditioned {
        log::warn!("Morley triangle of a triangle with an angle below {THIN_ANGLE} rad is ill-conditioned");
    }
    MorleyTriangle { points, ill_conditioned }
}

/// Perspector of a triangle and its Morley triangle, with the default tolerance.
pub fn second_morley_center(tri: &NumTri) -> Result<NumBary, MorleyError> {
    second_morley_center_with(tri, TAU)
}

/// As [`second_morley_center`]; the three pairwise meets of the vertex joins
/// must agree within `10·tau`.
pub fn second_morley_center_with(tri: &NumTri, tau: f64) -> Result<NumBary, MorleyError> {
    let m = morley_triangle(tri);
    let v = tri.vertices;
    let joins: [[f64; 3]; 3] = core::array::from_fn(|i| line_through(v[i], sub(m.points[i], v[i])));
    let mut meets = Vec::with_capacity(3);
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let p = meet(joins[i], joins[j]).ok_or(MorleyError::PerspectorNotFound(f64::INFINITY))?;
        meets.push(tri.to_bary(p)?);
    }
    let spread = meets[0].max_diff(&meets[1]).max(meets[1].max_diff(&meets[2])).max(meets[2].max_diff(&meets[0]));
    if spread > 10.0 * tau {
        return Err(MorleyError::PerspectorNotFound(spread));
    }
    let avg: [f64; 3] = core::array::from_fn(|c| (meets[0].0[c] + meets[1].0[c] + meets[2].0[c]) / 3.0);
    NumBary::new(avg)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CurveSample {
    Point { k: f64, r: NumBary },
    /// `R(k)` is at infinity or undefined here.
    Pole { k: f64 },
}

impl CurveSample {
    pub fn k(&self) -> f64 {
        match *self {
            CurveSample::Point { k, .. } | CurveSample::Pole { k } => k,
        }
    }
}

/// `R(k)` over a grid, flagging poles instead of failing.
pub fn sample_curve(tri: &NumTri, grid: &[f64]) -> Result<Vec<CurveSample>, MorleyError> {
    let mut out = Vec::with_capacity(grid.len());
    for &k in grid {
        let kp = KParam::new(k)?;
        out.push(match r_of_k(tri, kp) {
            Ok(r) => CurveSample::Point { k, r },
            Err(_) => CurveSample::Pole { k },
        });
    }
    Ok(out)
}

/// Centers computed from the side lengths.
pub mod centers {
    use super::{NumBary, NumTri};

    fn sq(tri: &NumTri) -> [f64; 3] {
        tri.sides().map(|x| x * x)
    }

    /// `S_A = (b² + c² - a²)/2`, cyclically.
    fn conway(tri: &NumTri) -> [f64; 3] {
        let s = sq(tri);
        core::array::from_fn(|i| (s[(i + 1) % 3] + s[(i + 2) % 3] - s[i]) / 2.0)
    }

    pub fn incenter(tri: &NumTri) -> NumBary {
        NumBary::new(tri.sides()).expect("positive sides")
    }

    pub fn centroid(_tri: &NumTri) -> NumBary {
        NumBary::new([1.0, 1.0, 1.0]).expect("nonzero")
    }

    /// `(1/S_A : 1/S_B : 1/S_C)`, written as `(S_B S_C : S_C S_A : S_A S_B)`.
    pub fn orthocenter(tri: &NumTri) -> NumBary {
        let s = conway(tri);
        NumBary::new([s[1] * s[2], s[2] * s[0], s[0] * s[1]]).expect("finite orthocenter")
    }

    /// `(a² S_A : b² S_B : c² S_C)`.
    pub fn circumcenter(tri: &NumTri) -> NumBary {
        let (s, q) = (conway(tri), sq(tri));
        NumBary::new([q[0] * s[0], q[1] * s[1], q[2] * s[2]]).expect("finite circumcenter")
    }

    /// `(1/(s-a) : …)`, written as `((s-b)(s-c) : …)`.
    pub fn gergonne(tri: &NumTri) -> NumBary {
        let l = tri.sides();
        let s = (l[0] + l[1] + l[2]) / 2.0;
        let t = l.map(|x| s - x);
        NumBary::new([t[1] * t[2], t[2] * t[0], t[0] * t[1]]).expect("positive weights")
    }

    /// `(a²yz : b²zx : c²xy)`.
    pub fn isogonal_conjugate(tri: &NumTri, p: &NumBary) -> Result<NumBary, super::MorleyError> {
        let q = sq(tri);
        let [x, y, z] = p.coords();
        NumBary::new([q[0] * y * z, q[1] * z * x, q[2] * x * y])
    }
}

/// A triangle with vertices in `[-10, 10]²`, all angles at least 0.15 rad
/// and side lengths differing pairwise by at least 2%.
pub fn random_scalene(rng: &mut SplitMix64) -> NumTri {
    loop {
        let mut p = || [20.0 * rng.unit_f64() - 10.0, 20.0 * rng.unit_f64() - 10.0];
        let Ok(t) = NumTri::new(p(), p(), p()) else { continue };
        let l = t.sides();
        let scalene = (0..3).all(|i| fabs(l[i] - l[(i + 1) % 3]) > 0.02 * l[i].max(l[(i + 1) % 3]));
        if scalene && t.angles.iter().all(|&x| x > 0.15) {
            return t;
        }
    }
}
