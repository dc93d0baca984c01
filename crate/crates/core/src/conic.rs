//! Conics as symmetric 3×3 integer matrices, in point and line form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg;
use crate::projective::{canonical_ints, Rat, Triple};
use crate::triangle::{Side, Triangle};
use crate::{GeomError, ProjLine, ProjPoint};

type Matrix = [[BigInt; 3]; 3];

fn canonical_matrix(m: Matrix) -> Option<Matrix> {
    let upper = [
        m[0][0].clone(),
        m[0][1].clone(),
        m[0][2].clone(),
        m[1][1].clone(),
        m[1][2].clone(),
        m[2][2].clone(),
    ];
    let [a, b, c, d, e, f] = canonical_ints(upper)?;
    Some([[a.clone(), b.clone(), c.clone()], [b, d.clone(), e.clone()], [c, e, f]])
}

fn quadratic_form(m: &Matrix, v: &Triple) -> BigInt {
    let mut s = BigInt::zero();
    for i in 0..3 {
        for j in 0..3 {
            if !m[i][j].is_zero() {
                s += &m[i][j] * &v[i] * &v[j];
            }
        }
    }
    s
}

fn apply(m: &Matrix, v: &Triple) -> Triple {
    core::array::from_fn(|i| &m[i][0] * &v[0] + &m[i][1] * &v[1] + &m[i][2] * &v[2])
}

fn det(m: &Matrix) -> BigInt {
    crate::projective::det3(&m[0], &m[1], &m[2])
}

fn adjugate(m: &Matrix) -> Matrix {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
    // adj = transpose of cofactor matrix; symmetric input gives symmetric output
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

/// The six Veronese monomials `(x², y², z², xy, xz, yz)`.
fn veronese(v: &Triple) -> [BigInt; 6] {
    [
        &v[0] * &v[0],
        &v[1] * &v[1],
        &v[2] * &v[2],
        &v[0] * &v[1],
        &v[0] * &v[2],
        &v[1] * &v[2],
    ]
}

/// Matrix of the quadratic form with Veronese coefficient vector `c`, doubled
/// so that the off-diagonal halves stay integral.
fn matrix_from_veronese(c: &[BigInt; 6]) -> Matrix {
    let two = BigInt::from(2);
    [
        [&two * &c[0], c[3].clone(), c[4].clone()],
        [c[3].clone(), &two * &c[1], c[5].clone()],
        [c[4].clone(), c[5].clone(), &two * &c[2]],
    ]
}

fn matrix_from_rats(m: &[[Rat; 3]; 3]) -> Result<Matrix, GeomError> {
    for i in 0..3 {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(GeomError::NotSymmetric);
            }
        }
    }
    let lcm_all = {
        use num_integer::Integer;
        m.iter().flatten().fold(BigInt::one(), |l, r| l.lcm(r.denom()))
    };
    let scaled: Matrix =
        core::array::from_fn(|i| core::array::from_fn(|j| (&m[i][j] * Rat::from_integer(lcm_all.clone())).to_integer()));
    canonical_matrix(scaled).ok_or(GeomError::ZeroVector)
}

/// Point conic `{p : pᵀ M p = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conic {
    m: Matrix,
}

/// Line conic `{l : lᵀ M l = 0}`: the tangent lines of a point conic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualConic {
    m: Matrix,
}

macro_rules! sym_common {
    ($name:ident) => {
        impl $name {
            pub fn from_matrix(m: [[Rat; 3]; 3]) -> Result<Self, GeomError> {
                matrix_from_rats(&m).map(|m| Self { m })
            }

            pub fn from_i64(m: [[i64; 3]; 3]) -> Result<Self, GeomError> {
                Self::from_matrix(m.map(|r| r.map(|x| Rat::from_integer(x.into()))))
            }

            /// Canonical symmetric integer matrix.
            pub fn matrix(&self) -> &[[BigInt; 3]; 3] {
                &self.m
            }

            pub fn det(&self) -> BigInt {
                det(&self.m)
            }

            pub fn is_degenerate(&self) -> bool {
                self.det().is_zero()
            }
        }
    };
}

sym_common!(Conic);
sym_common!(DualConic);

impl Conic {
    /// Value of the quadratic form at `p` (canonical coordinates).
    pub fn eval(&self, p: &ProjPoint) -> BigInt {
        quadratic_form(&self.m, p.coords())
    }

    /// Polar line of `p`; the tangent at `p` when `p` is on the conic.
    pub fn polar(&self, p: &ProjPoint) -> Result<ProjLine, GeomError> {
        ProjLine::from_ints(apply(&self.m, p.coords()))
    }
}

impl DualConic {
    pub fn eval(&self, l: &ProjLine) -> BigInt {
        quadratic_form(&self.m, l.coords())
    }

    /// Point of contact of a tangent line `l`.
    pub fn contact_point(&self, l: &ProjLine) -> Result<ProjPoint, GeomError> {
        ProjPoint::from_ints(apply(&self.m, l.coords()))
    }

    /// The point conic whose tangents this is (adjugate).
    pub fn point_conic(&self) -> Result<Conic, GeomError> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        Ok(Conic { m: canonical_matrix(adjugate(&self.m)).expect("nonsingular") })
    }
}

/// The conic through five points.
pub fn conic_through_points(points: &[ProjPoint; 5]) -> Result<Conic, GeomError> {
    let rows: Vec<[BigInt; 6]> = points.iter().map(|p| veronese(p.coords())).collect();
    let c = linalg::nullspace_vector(&rows).ok_or(GeomError::DegenerateInput)?;
    let m = canonical_matrix(matrix_from_veronese(&c)).expect("nonzero nullspace vector");
    Ok(Conic { m })
}

/// The conic tangent to five lines, in line form.
pub fn conic_tangent_to_lines(lines: &[ProjLine; 5]) -> Result<DualConic, GeomError> {
    let rows: Vec<[BigInt; 6]> = lines.iter().map(|l| veronese(l.coords())).collect();
    let c = linalg::nullspace_vector(&rows).ok_or(GeomError::DegenerateInput)?;
    let m = canonical_matrix(matrix_from_veronese(&c)).expect("nonzero nullspace vector");
    Ok(DualConic { m })
}

pub fn is_tangent(l: &ProjLine, d: &DualConic) -> bool {
    d.eval(l).is_zero()
}

pub fn on_conic(p: &ProjPoint, c: &Conic) -> bool {
    c.eval(p).is_zero()
}

/// Line form of a nondegenerate conic (its adjugate).
pub fn dual_conic(c: &Conic) -> Result<DualConic, GeomError> {
    if c.is_degenerate() {
        return Err(GeomError::DegenerateConic);
    }
    Ok(DualConic { m: canonical_matrix(adjugate(&c.m)).expect("nonsingular") })
}

/// Determinant of the 6×6 matrix of Veronese rows; zero iff the six points
/// lie on a common (possibly degenerate) conic.
pub fn conconic6_det(points: &[ProjPoint; 6]) -> BigInt {
    linalg::det(points.iter().map(|p| veronese(p.coords()).to_vec()).collect())
}

pub fn conconic6(points: &[ProjPoint; 6]) -> bool {
    conconic6_det(points).is_zero()
}

/// Product of signed side ratios for two points on each sideline.
///
/// `traces` holds the pairs on `BC`, `CA`, `AB` in that order. Each factor is
/// the product of the two signed ratios along the oriented sides `B→C`,
/// `C→A`, `A→B`. The six points are conconic iff the result is one.
pub fn carnot_product(tri: &Triangle, traces: &[ProjPoint; 6]) -> Result<Rat, GeomError> {
    let mut product = Rat::one();
    for (k, p) in traces.iter().enumerate() {
        let side = Side::ALL[k / 2];
        let b = tri.proj_to_bary(p);
        let w = b.coords();
        if !w[side.index()].is_zero() {
            return Err(GeomError::NotOnSideline);
        }
        // (tail, head) vertex indices of the oriented side
        let (tail, head) = side.oriented();
        if w[tail].is_zero() || w[head].is_zero() {
            return Err(GeomError::TraceAtVertex);
        }
        // tail→P : P→head = weight(head) : weight(tail)
        product *= &w[head] / &w[tail];
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn circle_point(n: i64, d: i64) -> ProjPoint {
        // ((1-t²) : 2t : (1+t²)) with t = n/d
        ProjPoint::from_i64(d * d - n * n, 2 * n * d, d * d + n * n).unwrap()
    }

    fn circle_tangent(n: i64, d: i64) -> ProjLine {
        ProjLine::from_i64(d * d - n * n, 2 * n * d, -(d * d + n * n)).unwrap()
    }

    fn unit_circle() -> Conic {
        Conic::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap()
    }

    #[test]
    fn five_points_give_unit_circle() {
        let pts = [
            ProjPoint::from_i64(1, 0, 1).unwrap(),
            ProjPoint::from_i64(-1, 0, 1).unwrap(),
            ProjPoint::from_i64(0, 1, 1).unwrap(),
            ProjPoint::from_i64(0, -1, 1).unwrap(),
            ProjPoint::from_i64(3, 4, 5).unwrap(),
        ];
        // substitution: 1-1=0, 1-1=0, 1-1=0, 1-1=0, 9+16-25=0
        let c = conic_through_points(&pts).unwrap();
        assert_eq!(c, unit_circle());
        assert!(pts.iter().all(|p| on_conic(p, &c)));
    }

    #[test]
    fn four_collinear_points_are_degenerate() {
        let pts = [
            ProjPoint::from_i64(0, 0, 1).unwrap(),
            ProjPoint::from_i64(1, 0, 1).unwrap(),
            ProjPoint::from_i64(2, 0, 1).unwrap(),
            ProjPoint::from_i64(3, 0, 1).unwrap(),
            ProjPoint::from_i64(0, 1, 1).unwrap(),
        ];
        assert_eq!(conic_through_points(&pts), Err(GeomError::DegenerateInput));
    }

    #[test]
    fn five_tangents_give_dual_unit_circle() {
        let lines = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)].map(|(n, d)| circle_tangent(n, d));
        let d = conic_tangent_to_lines(&lines).unwrap();
        assert_eq!(d, dual_conic(&unit_circle()).unwrap());
        assert_eq!(d.matrix(), unit_circle().matrix());
        assert!(is_tangent(&circle_tangent(3, 7), &d));
        assert_eq!(d.point_conic().unwrap(), unit_circle());
        assert_eq!(d.contact_point(&circle_tangent(3, 7)).unwrap(), circle_point(3, 7));
    }

    #[test]
    fn four_concurrent_lines_are_degenerate() {
        let lines = [
            ProjLine::from_i64(1, 0, 0).unwrap(),
            ProjLine::from_i64(0, 1, 0).unwrap(),
            ProjLine::from_i64(1, 1, 0).unwrap(),
            ProjLine::from_i64(1, 2, 0).unwrap(),
            ProjLine::from_i64(1, 1, 1).unwrap(),
        ];
        assert_eq!(conic_tangent_to_lines(&lines), Err(GeomError::DegenerateInput));
    }

    #[test]
    fn tangency_examples() {
        let d = dual_conic(&unit_circle()).unwrap();
        assert!(is_tangent(&ProjLine::from_i64(1, 0, -1).unwrap(), &d));
        assert!(!is_tangent(&ProjLine::from_i64(1, 0, 0).unwrap(), &d));
        assert!(on_conic(&ProjPoint::from_i64(1, 0, 1).unwrap(), &unit_circle()));
        assert!(!on_conic(&ProjPoint::from_i64(0, 0, 1).unwrap(), &unit_circle()));
    }

    #[test]
    fn dual_examples() {
        let c = Conic::from_i64([[1, 0, 0], [0, 2, 0], [0, 0, -1]]).unwrap();
        // cofactors: (2·-1, 1·-1, 1·2) = (-2, -1, 2)
        let d = dual_conic(&c).unwrap();
        assert_eq!(d, DualConic::from_i64([[-2, 0, 0], [0, -1, 0], [0, 0, 2]]).unwrap());
        let rank2 = Conic::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 0]]).unwrap();
        assert_eq!(dual_conic(&rank2), Err(GeomError::DegenerateConic));
        let back = Conic::from_matrix(d.matrix().clone().map(|row| row.map(Rat::from_integer))).unwrap();
        assert_eq!(dual_conic(&back).unwrap().matrix(), c.matrix());
    }

    #[test]
    fn conconic_examples() {
        let six = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2), (3, 1)].map(|(n, d)| circle_point(n, d));
        assert!(conconic6(&six));
        let mut moved = six.clone();
        let (x, y) = moved[5].to_cartesian().unwrap();
        moved[5] = ProjPoint::finite(x + r(1, 1000), y);
        assert!(!conconic6(&moved));
        let mut five_on_line: [ProjPoint; 6] = core::array::from_fn(|i| ProjPoint::from_i64(i as i64, 2 * i as i64 + 1, 1).unwrap());
        five_on_line[5] = ProjPoint::from_i64(7, -3, 2).unwrap();
        assert!(conconic6(&five_on_line));
    }

    #[test]
    fn carnot_examples() {
        let tri = Triangle::from_i64([(0, 0), (6, 0), (1, 5)]).unwrap();
        let mid = |s: Side| tri.bary_to_proj(&s.trace_bary(Rat::one(), Rat::one()).unwrap());
        let medial = [mid(Side::A), mid(Side::A), mid(Side::B), mid(Side::B), mid(Side::C), mid(Side::C)];
        assert_eq!(carnot_product(&tri, &medial).unwrap(), Rat::one());
        let mut doubled = medial.clone();
        doubled[0] = tri.bary_to_proj(&Side::A.trace_bary(r(1, 1), r(2, 1)).unwrap());
        assert_eq!(carnot_product(&tri, &doubled).unwrap(), r(2, 1));
        let mut at_vertex = medial.clone();
        at_vertex[2] = tri.vertex(0).clone();
        assert_eq!(carnot_product(&tri, &at_vertex), Err(GeomError::TraceAtVertex));
        let mut off = medial;
        off[4] = tri.bary_to_proj(&crate::Bary::from_i64(1, 1, 1).unwrap());
        assert_eq!(carnot_product(&tri, &off), Err(GeomError::NotOnSideline));
    }
}
