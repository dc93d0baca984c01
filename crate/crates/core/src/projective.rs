//! Homogeneous points and lines over the rationals.
//!
//! Both kinds are stored in canonical form: coprime integer coordinates with
//! the first nonzero coordinate positive. Two values are projectively equal
//! exactly when their canonical forms are equal, so derived `Eq`/`Hash` are
//! meaningful.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::GeomError;

/// Exact rational number.
pub type Rat = BigRational;

pub(crate) type Triple = [BigInt; 3];

pub(crate) fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &Triple, b: &Triple) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Determinant of the matrix with rows `a`, `b`, `c`, by cofactor expansion.
pub(crate) fn det3(a: &Triple, b: &Triple, c: &Triple) -> BigInt {
    dot(a, &cross(b, c))
}

pub(crate) fn is_zero(v: &Triple) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides out the content and makes the leading nonzero entry positive.
pub(crate) fn canonical_ints<const N: usize>(mut v: [BigInt; N]) -> Option<[BigInt; N]> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    Some(v)
}

/// Scales three rationals by the lcm of their denominators.
pub(crate) fn clear_denominators(v: &[Rat; 3]) -> Triple {
    let l = v.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    [0, 1, 2].map(|i| (&v[i] * Rat::from_integer(l.clone())).to_integer())
}

macro_rules! homogeneous {
    ($name:ident, $what:literal) => {
        impl $name {
            /// Builds from rational coordinates; rejects the zero triple.
            pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, GeomError> {
                Self::from_ints(clear_denominators(&[a, b, c]))
            }

            pub fn from_ints(v: [BigInt; 3]) -> Result<Self, GeomError> {
                canonical_ints(v).map(Self).ok_or(GeomError::ZeroVector)
            }

            pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self, GeomError> {
                Self::from_ints([a.into(), b.into(), c.into()])
            }

            /// Canonical integer coordinates.
            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn to_rats(&self) -> [Rat; 3] {
                self.0.clone().map(Rat::from_integer)
            }

            /// Re-canonicalizes; a no-op on values built through this API.
            pub fn canonical(&self) -> Self {
                Self(canonical_ints(self.0.clone()).expect(concat!($what, " is never zero")))
            }

            /// Approximate coordinates, scaled so the largest magnitude is at most one.
            pub fn to_f64_scaled(&self) -> [f64; 3] {
                let v = scaled_f64(&self.0);
                [v[0], v[1], v[2]]
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
            }
        }
    };
}

/// Converts big integers to floats after a common power-of-two rescale, so
/// huge canonical coordinates do not overflow.
pub(crate) fn scaled_f64(v: &[BigInt]) -> alloc::vec::Vec<f64> {
    use num_traits::ToPrimitive;
    let bits = v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60);
    let raw: alloc::vec::Vec<f64> = v.iter().map(|x| (x >> shift).to_f64().unwrap_or(0.0)).collect();
    let m = raw.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if m > 0.0 {
        raw.iter().map(|x| x / m).collect()
    } else {
        raw
    }
}

/// Point of the projective plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Triple);

/// Line of the projective plane; `p` is incident iff `u·x + v·y + w·z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine(Triple);

homogeneous!(ProjPoint, "point");
homogeneous!(ProjLine, "line");

impl ProjPoint {
    /// The affine point `(x, y)` in the chart `z = 1`.
    pub fn finite(x: Rat, y: Rat) -> Self {
        Self::new(x, y, Rat::one()).expect("z = 1")
    }

    pub fn is_finite(&self) -> bool {
        !self.0[2].is_zero()
    }

    pub fn to_cartesian(&self) -> Option<(Rat, Rat)> {
        if !self.is_finite() {
            return None;
        }
        let z = Rat::from_integer(self.0[2].clone());
        Some((Rat::from_integer(self.0[0].clone()) / &z, Rat::from_integer(self.0[1].clone()) / z))
    }

    pub fn to_f64(&self) -> Option<(f64, f64)> {
        if !self.is_finite() {
            return None;
        }
        let s = scaled_f64(&self.0);
        Some((s[0] / s[2], s[1] / s[2]))
    }

    pub fn lies_on(&self, l: &ProjLine) -> bool {
        dot(&self.0, &l.0).is_zero()
    }

    /// Incidence residual `u·x + v·y + w·z` on canonical coordinates.
    pub fn residual(&self, l: &ProjLine) -> BigInt {
        dot(&self.0, &l.0)
    }
}

impl ProjLine {
    pub fn at_infinity() -> Self {
        Self([BigInt::zero(), BigInt::zero(), BigInt::one()])
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeomError> {
    canonical_ints(cross(&p.0, &q.0)).map(ProjLine).ok_or(GeomError::CoincidentPoints)
}

/// The common point of two distinct lines; parallel lines meet at infinity.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, GeomError> {
    canonical_ints(cross(&l.0, &m.0)).map(ProjPoint).ok_or(GeomError::CoincidentLines)
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    collinear_det(p, q, r).is_zero()
}

pub fn collinear_det(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> BigInt {
    det3(&p.0, &q.0, &r.0)
}

pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    concurrent_det(l, m, n).is_zero()
}

pub fn concurrent_det(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> BigInt {
    det3(&l.0, &m.0, &n.0)
}

/// Proportionality test by cross-multiplication; independent of canonical form.
pub fn proj_equal(p: &ProjPoint, q: &ProjPoint) -> bool {
    is_zero(&cross(&p.0, &q.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_i64(a, b, c).unwrap()
    }

    fn l(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::from_i64(a, b, c).unwrap()
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn join_of_axis_points() {
        assert_eq!(join(&p(1, 0, 0), &p(0, 1, 0)).unwrap(), l(0, 0, 1));
    }

    #[test]
    fn join_hand_expanded() {
        // (1,0,1) x (0,1,1) = (0*1-1*1, 1*0-1*1, 1*1-0*0) = (-1,-1,1) ~ (1,1,-1)
        let a = p(1, 0, 1);
        let b = p(0, 1, 1);
        let line = join(&a, &b).unwrap();
        assert_eq!(line, l(1, 1, -1));
        assert!(a.lies_on(&line) && b.lies_on(&line));
    }

    #[test]
    fn join_same_point_fails() {
        assert_eq!(join(&p(1, 2, 3), &p(2, 4, 6)), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&l(1, 0, 0), &l(0, 1, 0)).unwrap(), p(0, 0, 1));
        let inf = meet(&l(1, 0, -1), &l(1, 0, -2)).unwrap();
        assert_eq!(inf, p(0, 1, 0));
        assert!(!inf.is_finite());
        assert_eq!(meet(&l(1, 0, -1), &l(-2, 0, 2)), Err(GeomError::CoincidentLines));
    }

    #[test]
    fn meet_of_joins_recovers_shared_point() {
        let (a, b, c) = (p(3, -1, 2), p(5, 7, 1), p(-4, 2, 9));
        let back = meet(&join(&a, &b).unwrap(), &join(&a, &c).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&p(1, 0, 0), &p(0, 1, 0), &p(1, 1, 0)));
        assert!(!collinear(&p(1, 0, 0), &p(0, 1, 0), &p(0, 0, 1)));
    }

    #[test]
    fn concurrent_examples() {
        assert!(concurrent(&l(1, 0, 0), &l(0, 1, 0), &l(1, 1, 0)));
        // sidelines of the triangle (0,0),(1,0),(0,1)
        assert!(!concurrent(&l(0, 1, 0), &l(1, 0, 0), &l(1, 1, -1)));
    }

    #[test]
    fn proj_equal_examples() {
        assert!(proj_equal(&p(1, 2, 3), &p(2, 4, 6)));
        assert!(!proj_equal(&p(1, 2, 3), &p(1, 2, 4)));
        assert!(proj_equal(&p(0, 0, 1), &p(0, 0, -5)));
    }

    #[test]
    fn rational_constructor_clears_denominators() {
        let q = ProjPoint::new(r(1, 2), r(-1, 3), r(5, 6)).unwrap();
        assert_eq!(q, p(3, -2, 5));
        assert_eq!(ProjPoint::new(r(0, 1), r(0, 1), r(0, 1)), Err(GeomError::ZeroVector));
        assert_eq!(q.to_cartesian().unwrap(), (r(3, 5), r(-2, 5)));
    }

    #[test]
    fn canonical_sign_and_content() {
        let q = p(-4, 6, 0);
        assert_eq!(q.coords(), &[BigInt::from(2), BigInt::from(-3), BigInt::zero()]);
        assert_eq!(q.canonical(), q);
    }
}
