use cevian_core::projective::{collinear_det, concurrent_det};
use cevian_core::{collinear, concurrent, join, meet, ProjPoint, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=30).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (rat(), rat(), rat()).prop_filter_map("zero vector", |(a, b, c)| ProjPoint::new(a, b, c).ok())
}

fn scalar() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn rescale(p: &ProjPoint, s: &Rat) -> ProjPoint {
    let [a, b, c] = p.to_rats();
    ProjPoint::new(a * s, b * s, c * s).unwrap()
}

proptest! {
    #[test]
    fn meet_of_joins_is_incident(p in point(), q in point(), r in point(), s in point()) {
        let (Ok(l), Ok(m)) = (join(&p, &q), join(&r, &s)) else { return Ok(()) };
        prop_assert!(p.lies_on(&l) && q.lies_on(&l));
        prop_assert_eq!(p.residual(&l), BigInt::zero());
        if let Ok(x) = meet(&l, &m) {
            prop_assert_eq!(x.residual(&l), BigInt::zero());
            prop_assert_eq!(x.residual(&m), BigInt::zero());
        }
    }

    #[test]
    fn canonical_is_idempotent(p in point()) {
        let c = p.canonical();
        let cc = c.canonical();
        prop_assert_eq!(cc.coords(), c.coords());
        prop_assert_eq!(&c, &p);
    }

    #[test]
    fn scaling_preserves_equality(p in point(), s in scalar()) {
        prop_assert_eq!(rescale(&p, &s), p);
    }

    #[test]
    fn collinear_symmetric_and_scale_free(
        p in point(), q in point(), r in point(),
        a in scalar(), b in scalar(), c in scalar(),
    ) {
        let base = collinear(&p, &q, &r);
        for (x, y, z) in [(&p, &r, &q), (&q, &p, &r), (&q, &r, &p), (&r, &p, &q), (&r, &q, &p)] {
            prop_assert_eq!(collinear(x, y, z), base);
        }
        prop_assert_eq!(collinear(&rescale(&p, &a), &rescale(&q, &b), &rescale(&r, &c)), base);
        prop_assert_eq!(collinear_det(&p, &q, &r).is_zero(), base);
    }

    #[test]
    fn point_on_join_is_collinear(p in point(), q in point(), s in rat(), t in rat()) {
        prop_assume!(p != q);
        // s·p + t·q with the canonical representatives
        let [p0, p1, p2] = p.to_rats();
        let [q0, q1, q2] = q.to_rats();
        let Ok(x) = ProjPoint::new(&s * p0 + &t * q0, &s * p1 + &t * q1, &s * p2 + &t * q2) else { return Ok(()) };
        prop_assert!(collinear(&p, &q, &x));
    }

    #[test]
    fn concurrency_is_dual_to_collinearity(p in point(), q in point(), r in point()) {
        // three lines through a common point
        let (Ok(a), Ok(b), Ok(c)) = (join(&p, &q), join(&p, &r), join(&q, &r)) else { return Ok(()) };
        let Ok(x) = meet(&a, &b) else { return Ok(()) };
        let Ok(through) = join(&x, &ProjPoint::from_i64(1, 2, 3).unwrap()) else { return Ok(()) };
        prop_assert!(concurrent(&a, &b, &through));
        prop_assert_eq!(concurrent_det(&a, &b, &c).is_zero(), collinear(&p, &q, &r));
    }
}
