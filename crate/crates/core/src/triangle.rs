//! Reference triangle, barycentric coordinates and the trace maps.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::projective::{canonical_ints, clear_denominators, cross, dot, is_zero, Rat, Triple};
use crate::{join, GeomError, ProjLine, ProjPoint};

/// A sideline, named by the opposite vertex (`Side::A` is `BC`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Orientation used for signed ratios: `B→C`, `C→A`, `A→B`.
    pub fn oriented(self) -> (usize, usize) {
        match self {
            Side::A => (1, 2),
            Side::B => (2, 0),
            Side::C => (0, 1),
        }
    }

    /// Vertex indices on this side, in increasing order.
    pub fn ends(self) -> (usize, usize) {
        match self {
            Side::A => (1, 2),
            Side::B => (0, 2),
            Side::C => (0, 1),
        }
    }

    pub fn next(self) -> Side {
        Side::ALL[(self.index() + 1) % 3]
    }

    pub fn prev(self) -> Side {
        Side::ALL[(self.index() + 2) % 3]
    }

    /// Barycentric point on this side with weights `u`, `v` on the two ends
    /// (in vertex order): `(0:u:v)`, `(u:0:v)` or `(u:v:0)`.
    pub fn trace_bary(self, u: Rat, v: Rat) -> Result<Bary, GeomError> {
        if u.is_zero() || v.is_zero() {
            return Err(GeomError::TraceAtVertex);
        }
        let (i, j) = self.ends();
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero()];
        c[i] = u;
        c[j] = v;
        Bary::new(c)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
            Side::C => "C",
        })
    }
}

/// Homogeneous barycentric coordinates. Equality is projective.
#[derive(Clone, Debug)]
pub struct Bary([Rat; 3]);

impl Bary {
    pub fn new(c: [Rat; 3]) -> Result<Self, GeomError> {
        if c.iter().all(Zero::is_zero) {
            return Err(GeomError::ZeroVector);
        }
        Ok(Bary(c))
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self, GeomError> {
        Self::new([x, y, z].map(|v| Rat::from_integer(v.into())))
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.0
    }

    /// Coprime integer representative with leading nonzero entry positive.
    pub fn canonical(&self) -> [BigInt; 3] {
        canonical_ints(clear_denominators(&self.0)).expect("nonzero")
    }

    pub fn is_finite(&self) -> bool {
        !(&self.0[0] + &self.0[1] + &self.0[2]).is_zero()
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.0.iter().any(Zero::is_zero)
    }
}

impl PartialEq for Bary {
    fn eq(&self, other: &Self) -> bool {
        is_zero(&cross(&clear_denominators(&self.0), &clear_denominators(&other.0)))
    }
}

impl Eq for Bary {}

impl fmt::Display for Bary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A point on a sideline, distinct from both of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    side: Side,
    bary: Bary,
}

impl Trace {
    /// `u`, `v` are the weights of the two vertices of `side`, in vertex order.
    pub fn new(side: Side, u: Rat, v: Rat) -> Result<Self, GeomError> {
        Ok(Trace { side, bary: side.trace_bary(u, v)? })
    }

    pub fn from_i64(side: Side, u: i64, v: i64) -> Result<Self, GeomError> {
        Self::new(side, Rat::from_integer(u.into()), Rat::from_integer(v.into()))
    }

    pub fn from_bary(side: Side, bary: Bary) -> Result<Self, GeomError> {
        if !bary.0[side.index()].is_zero() {
            return Err(GeomError::NotOnSideline);
        }
        let (u, v) = weights_of(&bary, side);
        Self::new(side, u, v)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bary(&self) -> &Bary {
        &self.bary
    }

    pub fn weights(&self) -> (Rat, Rat) {
        weights_of(&self.bary, self.side)
    }

    /// True when the trace lies strictly between the two vertices.
    pub fn is_inside_segment(&self) -> bool {
        let (u, v) = self.weights();
        u.is_positive() == v.is_positive()
    }
}

fn weights_of(b: &Bary, side: Side) -> (Rat, Rat) {
    let (i, j) = side.ends();
    (b.0[i].clone(), b.0[j].clone())
}

/// Triangle with rational Cartesian vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    cartesian: [(Rat, Rat); 3],
    vertices: [ProjPoint; 3],
    /// Squared lengths of the sides opposite each vertex: `a²`, `b²`, `c²`.
    sq: [Rat; 3],
    /// Columns are the homogeneous vertices; maps barycentrics to the chart.
    frame: [Triple; 3],
}

impl Triangle {
    pub fn new(a: (Rat, Rat), b: (Rat, Rat), c: (Rat, Rat)) -> Result<Self, GeomError> {
        let cartesian = [a, b, c];
        let vertices = cartesian.clone().map(|(x, y)| ProjPoint::finite(x, y));
        if crate::collinear(&vertices[0], &vertices[1], &vertices[2]) {
            return Err(GeomError::DegenerateTriangle);
        }
        let d2 = |p: &(Rat, Rat), q: &(Rat, Rat)| {
            let dx = &p.0 - &q.0;
            let dy = &p.1 - &q.1;
            &dx * &dx + &dy * &dy
        };
        let sq = [
            d2(&cartesian[1], &cartesian[2]),
            d2(&cartesian[2], &cartesian[0]),
            d2(&cartesian[0], &cartesian[1]),
        ];
        // affine columns (x, y, 1) scaled by one common denominator
        let l = cartesian
            .iter()
            .flat_map(|(x, y)| [x.denom(), y.denom()])
            .fold(BigInt::from(1), |l, d| num_integer::Integer::lcm(&l, d));
        let lr = Rat::from_integer(l.clone());
        let frame = cartesian.clone().map(|(x, y)| [(x * &lr).to_integer(), (y * &lr).to_integer(), l.clone()]);
        Ok(Triangle { cartesian, vertices, sq, frame })
    }

    pub fn from_i64(v: [(i64, i64); 3]) -> Result<Self, GeomError> {
        let r = |x: i64| Rat::from_integer(x.into());
        Self::new((r(v[0].0), r(v[0].1)), (r(v[1].0), r(v[1].1)), (r(v[2].0), r(v[2].1)))
    }

    pub fn vertex(&self, i: usize) -> &ProjPoint {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[ProjPoint; 3] {
        &self.vertices
    }

    pub fn cartesian(&self, i: usize) -> &(Rat, Rat) {
        &self.cartesian[i]
    }

    /// Squared length of the side opposite vertex `i`.
    pub fn side_sq(&self, i: usize) -> &Rat {
        &self.sq[i]
    }

    pub fn a2(&self) -> &Rat {
        &self.sq[0]
    }

    pub fn b2(&self) -> &Rat {
        &self.sq[1]
    }

    pub fn c2(&self) -> &Rat {
        &self.sq[2]
    }

    pub fn sideline(&self, side: Side) -> ProjLine {
        let (i, j) = side.ends();
        join(&self.vertices[i], &self.vertices[j]).expect("vertices are distinct")
    }

    pub fn centroid(&self) -> ProjPoint {
        self.bary_to_proj(&Bary::from_i64(1, 1, 1).expect("nonzero"))
    }

    pub fn bary_to_proj(&self, b: &Bary) -> ProjPoint {
        let w = clear_denominators(&b.0);
        let f = &self.frame;
        let v: Triple = core::array::from_fn(|r| &f[0][r] * &w[0] + &f[1][r] * &w[1] + &f[2][r] * &w[2]);
        ProjPoint::from_ints(v).expect("frame is invertible")
    }

    /// Inverse of [`Triangle::bary_to_proj`] up to scale.
    pub fn proj_to_bary(&self, p: &ProjPoint) -> Bary {
        // Rows of adj(F) for F with columns f0, f1, f2 are f1×f2, f2×f0, f0×f1.
        let f = &self.frame;
        let x = p.coords();
        let rows = [cross(&f[1], &f[2]), cross(&f[2], &f[0]), cross(&f[0], &f[1])];
        Bary(rows.map(|r| Rat::from_integer(dot(&r, x))))
    }

    pub fn trace_point(&self, t: &Trace) -> ProjPoint {
        self.bary_to_proj(&t.bary)
    }

    /// Reads a point of a sideline back as a trace.
    pub fn trace_of(&self, side: Side, p: &ProjPoint) -> Result<Trace, GeomError> {
        Trace::from_bary(side, self.proj_to_bary(p))
    }
}

/// Reflection of the cevian through a trace in the angle bisector at the
/// opposite vertex: `(0:u:v) ↦ (0 : b²·v : c²·u)` and cyclically.
pub fn isogonal_trace(tri: &Triangle, t: &Trace) -> Trace {
    let (i, j) = t.side.ends();
    let (u, v) = t.weights();
    let mut c = [Rat::zero(), Rat::zero(), Rat::zero()];
    c[i] = &tri.sq[i] * v;
    c[j] = &tri.sq[j] * u;
    Trace { side: t.side, bary: Bary(c) }
}

/// Reflection of a trace in the midpoint of its side: `(0:u:v) ↦ (0:v:u)`.
pub fn isotomic_trace(t: &Trace) -> Trace {
    let (i, j) = t.side.ends();
    let mut c = t.bary.0.clone();
    c.swap(i, j);
    Trace { side: t.side, bary: Bary(c) }
}

/// `(x:y:z) ↦ (a²·y·z : b²·x·z : c²·x·y)`.
pub fn isogonal_conjugate(tri: &Triangle, b: &Bary) -> Result<Bary, GeomError> {
    if b.has_zero_coordinate() {
        return Err(GeomError::OnSideline);
    }
    let [x, y, z] = &b.0;
    Ok(Bary([&tri.sq[0] * y * z, &tri.sq[1] * x * z, &tri.sq[2] * x * y]))
}

/// `(x:y:z) ↦ (y·z : x·z : x·y)`.
pub fn isotomic_conjugate(b: &Bary) -> Result<Bary, GeomError> {
    if b.has_zero_coordinate() {
        return Err(GeomError::OnSideline);
    }
    let [x, y, z] = &b.0;
    Ok(Bary([y * z, x * z, x * y]))
}

/// Orthogonal projection of a finite point onto a finite line.
pub fn perpendicular_foot(p: &ProjPoint, l: &ProjLine) -> Result<ProjPoint, GeomError> {
    if !p.is_finite() || l.is_at_infinity() {
        return Err(GeomError::PointAtInfinity);
    }
    let [u, v, _] = l.coords();
    let [x, y, z] = p.coords();
    let n = u * u + v * v;
    let s = p.residual(l);
    ProjPoint::from_ints([&n * x - u * &s, &n * y - v * &s, n * z])
}

/// Exact zero test used by tests: `(p - foot) · direction(l)`.
pub fn foot_displacement_dot(p: &ProjPoint, foot: &ProjPoint, l: &ProjLine) -> Option<Rat> {
    let (px, py) = p.to_cartesian()?;
    let (fx, fy) = foot.to_cartesian()?;
    let [u, v, _] = l.coords();
    // direction of l is (v, -u)
    Some((px - fx) * Rat::from_integer(v.clone()) - (py - fy) * Rat::from_integer(u.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn scalene() -> Triangle {
        Triangle::from_i64([(0, 0), (7, 0), (2, 5)]).unwrap()
    }

    #[test]
    fn side_lengths() {
        let t = Triangle::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
        assert_eq!(t.a2(), &r(25, 1));
        assert_eq!(t.b2(), &r(9, 1));
        assert_eq!(t.c2(), &r(16, 1));
        assert_eq!(Triangle::from_i64([(0, 0), (1, 1), (2, 2)]), Err(GeomError::DegenerateTriangle));
    }

    #[test]
    fn bary_to_proj_examples() {
        let t = scalene();
        assert_eq!(t.bary_to_proj(&Bary::from_i64(1, 0, 0).unwrap()), *t.vertex(0));
        assert_eq!(t.centroid(), ProjPoint::finite(r(9, 3), r(5, 3)));
        assert_eq!(t.bary_to_proj(&Bary::from_i64(0, 1, 1).unwrap()), ProjPoint::finite(r(9, 2), r(5, 2)));
    }

    #[test]
    fn bary_round_trips() {
        let t = scalene();
        for b in [Bary::from_i64(1, 0, 0), Bary::from_i64(1, 1, 1), Bary::from_i64(0, 1, 1), Bary::from_i64(3, -1, 1)] {
            let b = b.unwrap();
            assert_eq!(t.proj_to_bary(&t.bary_to_proj(&b)), b);
        }
        // point at infinity
        let inf = Bary::from_i64(1, -1, 0).unwrap();
        assert!(!t.bary_to_proj(&inf).is_finite());
        assert_eq!(t.proj_to_bary(&t.bary_to_proj(&inf)), inf);
    }

    #[test]
    fn median_maps_to_symmedian() {
        let t = scalene();
        let median = Trace::from_i64(Side::A, 1, 1).unwrap();
        let sym = isogonal_trace(&t, &median);
        assert_eq!(sym.bary(), &Bary::new([Rat::zero(), t.b2().clone(), t.c2().clone()]).unwrap());
    }

    #[test]
    fn isogonal_trace_reflects_angle() {
        // 3-4-5 right triangle: the angle between AB and the median must equal
        // the angle between AC and the symmedian at A.
        let t = Triangle::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
        for side in Side::ALL {
            let median = Trace::new(side, r(1, 1), r(1, 1)).unwrap();
            let sym = isogonal_trace(&t, &median);
            let vi = side.index();
            let (i, j) = side.ends();
            let v = t.cartesian(vi);
            let to = |p: &ProjPoint| {
                let (x, y) = p.to_f64().unwrap();
                let (vx, vy) = (v.0.to_f64_lossy(), v.1.to_f64_lossy());
                (x - vx, y - vy)
            };
            let ang = |a: (f64, f64), b: (f64, f64)| {
                let c = (a.0 * b.0 + a.1 * b.1) / ((a.0.hypot(a.1)) * (b.0.hypot(b.1)));
                libm::acos(c.clamp(-1.0, 1.0))
            };
            let ei = to(t.vertex(i));
            let ej = to(t.vertex(j));
            let m = to(&t.trace_point(&median));
            let s = to(&t.trace_point(&sym));
            assert!((ang(ei, m) - ang(ej, s)).abs() < 1e-12, "side {side}");
        }
    }

    trait Lossy {
        fn to_f64_lossy(&self) -> f64;
    }

    impl Lossy for Rat {
        fn to_f64_lossy(&self) -> f64 {
            use num_traits::ToPrimitive;
            self.to_f64().unwrap()
        }
    }

    #[test]
    fn trace_involutions() {
        let t = scalene();
        for side in Side::ALL {
            let tr = Trace::new(side, r(3, 7), r(-5, 2)).unwrap();
            assert_eq!(isogonal_trace(&t, &isogonal_trace(&t, &tr)), tr);
            assert_eq!(isotomic_trace(&isotomic_trace(&tr)), tr);
        }
        let mid = Trace::from_i64(Side::A, 1, 1).unwrap();
        assert_eq!(isotomic_trace(&mid), mid);
        assert_eq!(isotomic_trace(&Trace::from_i64(Side::A, 1, 2).unwrap()), Trace::from_i64(Side::A, 2, 1).unwrap());
    }

    #[test]
    fn equal_adjacent_sides_make_isogonal_isotomic() {
        // no rational equilateral triangle exists; b² = c² already makes the
        // two maps agree on side BC
        let t = Triangle::from_i64([(2, 3), (0, 0), (4, 0)]).unwrap();
        assert_eq!(t.b2(), t.c2());
        let tr = Trace::new(Side::A, r(2, 1), r(-7, 3)).unwrap();
        assert_eq!(isogonal_trace(&t, &tr), isotomic_trace(&tr));
    }

    #[test]
    fn trace_at_vertex_rejected() {
        assert_eq!(Trace::from_i64(Side::B, 0, 1), Err(GeomError::TraceAtVertex));
        assert_eq!(Trace::from_bary(Side::B, Bary::from_i64(1, 1, 1).unwrap()), Err(GeomError::NotOnSideline));
    }

    #[test]
    fn conjugates() {
        let t = scalene();
        let symmedian = Bary::new([t.a2().clone(), t.b2().clone(), t.c2().clone()]).unwrap();
        assert_eq!(isogonal_conjugate(&t, &symmedian).unwrap(), Bary::from_i64(1, 1, 1).unwrap());
        assert_eq!(isotomic_conjugate(&Bary::from_i64(1, 2, 3).unwrap()).unwrap(), Bary::from_i64(6, 3, 2).unwrap());
        let b = Bary::from_i64(5, -2, 9).unwrap();
        assert_eq!(isogonal_conjugate(&t, &isogonal_conjugate(&t, &b).unwrap()).unwrap(), b);
        assert_eq!(isotomic_conjugate(&isotomic_conjugate(&b).unwrap()).unwrap(), b);
        assert_eq!(isotomic_conjugate(&Bary::from_i64(0, 1, 1).unwrap()), Err(GeomError::OnSideline));
    }

    #[test]
    fn feet() {
        let xaxis = ProjLine::from_i64(0, 1, 0).unwrap();
        assert_eq!(perpendicular_foot(&ProjPoint::from_i64(1, 1, 1).unwrap(), &xaxis).unwrap(), ProjPoint::from_i64(1, 0, 1).unwrap());
        let diag = ProjLine::from_i64(1, 1, -1).unwrap();
        let f = perpendicular_foot(&ProjPoint::from_i64(0, 0, 1).unwrap(), &diag).unwrap();
        assert_eq!(f, ProjPoint::finite(r(1, 2), r(1, 2)));
        let p = ProjPoint::finite(r(-3, 7), r(11, 5));
        let l = ProjLine::from_i64(3, -4, 2).unwrap();
        let f = perpendicular_foot(&p, &l).unwrap();
        assert!(f.lies_on(&l));
        assert!(foot_displacement_dot(&p, &f, &l).unwrap().is_zero());
        assert_eq!(perpendicular_foot(&ProjPoint::from_i64(1, 0, 0).unwrap(), &l), Err(GeomError::PointAtInfinity));
    }
}
