use cevian_core::config::ModeTag;
use cevian_core::rng::SplitMix64;
use cevian_core::suite::{gen_conic_first, Flavor, GeneratorSpec};
use cevian_core::triangle::Side;
use cevian_core::{
    carnot_product, conconic6, conconic6_det, conic_through_points, dual_conic, on_conic, GeomError, ProjPoint, Rat, Trace,
    Triangle,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-25i64..=25, 1i64..=25).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (rat(), rat(), rat()).prop_filter_map("zero vector", |(a, b, c)| ProjPoint::new(a, b, c).ok())
}

fn scale(p: &ProjPoint, s: i64) -> ProjPoint {
    let [a, b, c] = p.to_rats();
    let s = Rat::from_integer(s.into());
    ProjPoint::new(a * &s, b * &s, c * s).unwrap()
}

proptest! {
    #[test]
    fn conic_through_five_points(ps in proptest::array::uniform5(point()), extra in point()) {
        let c = match conic_through_points(&ps) {
            Ok(c) => c,
            Err(e) => { prop_assert_eq!(e, GeomError::DegenerateInput); return Ok(()) }
        };
        for p in &ps {
            prop_assert!(c.eval(p).is_zero());
        }
        let six = [ps[0].clone(), ps[1].clone(), ps[2].clone(), ps[3].clone(), ps[4].clone(), extra.clone()];
        prop_assert_eq!(conconic6(&six), on_conic(&extra, &c));
    }

    #[test]
    fn dual_round_trip(ps in proptest::array::uniform5(point())) {
        let Ok(c) = conic_through_points(&ps) else { return Ok(()) };
        let Ok(d) = dual_conic(&c) else { return Ok(()) };
        prop_assert_eq!(d.point_conic().unwrap(), c);
    }

    #[test]
    fn conconic6_permutation_and_scale_invariant(
        ps in proptest::array::uniform6(point()),
        perm in Just([0usize, 1, 2, 3, 4, 5]).prop_shuffle(),
        k in proptest::array::uniform6(1i64..5),
    ) {
        let base = conconic6(&ps);
        let moved: [ProjPoint; 6] = core::array::from_fn(|i| scale(&ps[perm[i]], if k[i] % 2 == 0 { -k[i] } else { k[i] }));
        prop_assert_eq!(conconic6(&moved), base);
        // the determinant only changes by the permutation sign and squared scales
        prop_assert_eq!(conconic6_det(&moved).is_zero(), conconic6_det(&ps).is_zero());
    }
}

fn random_trace(rng: &mut SplitMix64, side: Side) -> Option<Trace> {
    let (u, v) = (rng.nonzero_rat(12), rng.nonzero_rat(12));
    if (&u + &v).is_zero() {
        return None;
    }
    Trace::new(side, u, v).ok()
}

#[test]
fn carnot_matches_conconic() {
    let mut rng = SplitMix64::new(2024);
    let spec = GeneratorSpec::new(2024, 500, ModeTag::Free, Flavor::ConicFirst);
    let (mut conconic, mut generic) = (0, 0);
    for i in 0..1000u64 {
        let (tri, six) = if i % 2 == 0 {
            // conconic traces: tangent lines of one conic
            let cfg = gen_conic_first(&spec, i / 2).unwrap().config;
            (cfg.triangle().clone(), cfg.six_traces())
        } else {
            let tri = loop {
                let p = |r: &mut SplitMix64| (r.rat(15), r.rat(15));
                let (a, b, c) = (p(&mut rng), p(&mut rng), p(&mut rng));
                if let Ok(t) = Triangle::new(a, b, c) {
                    break t;
                }
            };
            let mut pts = Vec::new();
            while pts.len() < 6 {
                let side = Side::ALL[pts.len() / 2];
                // coincident points are conconic with anything
                if let Some(t) = random_trace(&mut rng, side) {
                    let p = tri.trace_point(&t);
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
            }
            (tri, pts.try_into().unwrap())
        };
        let carnot = carnot_product(&tri, &six).unwrap();
        let on = conconic6(&six);
        assert_eq!(carnot == Rat::one(), on, "instance {i}");
        if on {
            conconic += 1;
        } else {
            generic += 1;
        }
    }
    assert!(conconic >= 500 && generic > 0);
}
