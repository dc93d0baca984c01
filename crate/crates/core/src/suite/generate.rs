use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::checks::all_witnesses;
use super::{Flavor, GeneratorSpec, MAX_REDRAWS};
use crate::config::ModeTag;
use crate::rng::SplitMix64;
use crate::triangle::Side;
use crate::{build_configuration, join, meet, Configuration, GeomError, Mode, ProjLine, ProjPoint, Rat, Trace, TraceSet, Triangle};

/// A generated configuration and the number of draws thrown away first.
#[derive(Clone, Debug)]
pub struct Generated {
    pub config: Configuration,
    pub rejections: u32,
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn random_triangle(rng: &mut SplitMix64, bound: u32) -> Result<Triangle, GeomError> {
    let mut p = || (rng.rat(bound), rng.rat(bound));
    let (a, b, c) = (p(), p(), p());
    Triangle::new(a, b, c)
}

/// A trace with nonzero weights that is not the point at infinity.
fn random_trace(rng: &mut SplitMix64, side: Side, bound: u32) -> Result<Trace, GeomError> {
    let u = rng.nonzero_rat(bound);
    let v = rng.nonzero_rat(bound);
    if (&u + &v).is_zero() {
        return Err(GeomError::PointAtInfinity);
    }
    Trace::new(side, u, v)
}

fn random_traces(rng: &mut SplitMix64, bound: u32) -> Result<TraceSet, GeomError> {
    TraceSet::new(
        random_trace(rng, Side::A, bound)?,
        random_trace(rng, Side::B, bound)?,
        random_trace(rng, Side::C, bound)?,
    )
}

/// Rejects configurations where points that the statements treat as
/// distinct coincide, or where some checked object is undefined.
pub fn ensure_generic(cfg: &Configuration) -> Result<(), GeomError> {
    let six = cfg.six_traces();
    let lines = cfg.six_lines();
    for i in 0..6 {
        if !six[i].is_finite() {
            return Err(GeomError::PointAtInfinity);
        }
        for j in i + 1..6 {
            if six[i] == six[j] {
                return Err(GeomError::DegenerateConfiguration(String::from("two traces coincide")));
            }
            if lines[i] == lines[j] {
                return Err(GeomError::DegenerateConfiguration(String::from("two cevian lines coincide")));
            }
        }
    }
    let hex = cfg.hexagon().iter().chain(cfg.primed_hexagon());
    let hex: alloc::vec::Vec<&ProjPoint> = hex.collect();
    for i in 0..6 {
        if !hex[i].is_finite() {
            return Err(GeomError::HexagonPointAtInfinity);
        }
        if cfg.triangle().vertices().contains(hex[i]) {
            return Err(GeomError::DegenerateConfiguration(String::from("hexagon point at a vertex")));
        }
        for j in i + 1..6 {
            if hex[i] == hex[j] {
                return Err(GeomError::DegenerateConfiguration(String::from("hexagon points coincide")));
            }
        }
    }
    if cfg.r() == cfg.r_prime() {
        return Err(GeomError::DegenerateConfiguration(String::from("R = R'")));
    }
    all_witnesses(cfg, cfg.mode().tag()).map(|_| ())
}

fn draw_trace_config(rng: &mut SplitMix64, spec: &GeneratorSpec) -> Result<Configuration, GeomError> {
    let tri = random_triangle(rng, spec.bound)?;
    let traces = random_traces(rng, spec.bound)?;
    let mode = match spec.mode {
        ModeTag::Isogonal => Mode::Isogonal,
        ModeTag::Isotomic => Mode::Isotomic,
        ModeTag::Free => Mode::Free(random_traces(rng, spec.bound)?),
    };
    let cfg = build_configuration(tri, traces, mode)?;
    ensure_generic(&cfg)?;
    Ok(cfg)
}

fn with_redraws(
    rng: &mut SplitMix64,
    mut draw: impl FnMut(&mut SplitMix64) -> Result<Configuration, GeomError>,
) -> Result<Generated, GeomError> {
    for rejections in 0..=MAX_REDRAWS {
        match draw(rng) {
            Ok(config) => return Ok(Generated { config, rejections }),
            Err(e) => log::trace!("rejected draw: {e}"),
        }
    }
    Err(GeomError::GeneratorExhausted(MAX_REDRAWS))
}

/// Random triangle and traces; a pure function of `(seed, mode, index)`.
pub fn gen_trace_config(spec: &GeneratorSpec, index: u64) -> Result<Generated, GeomError> {
    spec.validate()?;
    let mut rng = SplitMix64::for_cell(spec.seed, spec.stream(), index);
    with_redraws(&mut rng, |rng| draw_trace_config(rng, spec))
}

/// Tangent of the unit circle `x² + y² = z²` at parameter `t`.
pub fn circle_tangent(t: &Rat) -> ProjLine {
    let t2 = t * t;
    ProjLine::new(Rat::one() - &t2, t + t, -(Rat::one() + t2)).expect("never zero")
}

/// Configuration whose six lines are the unit-circle tangents at `t`, in
/// the order `l_A, l'_A, l_B, l'_B, l_C, l'_C`. Vertex `A` is `l_A ∩ l'_A`.
pub fn conic_first_from_params(t: &[Rat; 6]) -> Result<Configuration, GeomError> {
    for i in 0..6 {
        for j in i + 1..6 {
            if t[i] == t[j] {
                return Err(GeomError::DegenerateConfiguration(format!("tangent parameters {i} and {j} are equal")));
            }
        }
    }
    let lines: [ProjLine; 6] = core::array::from_fn(|k| circle_tangent(&t[k]));
    let mut vertices = alloc::vec::Vec::with_capacity(3);
    for i in 0..3 {
        let v = meet(&lines[2 * i], &lines[2 * i + 1])?;
        let c = v.to_cartesian().ok_or(GeomError::PointAtInfinity)?;
        vertices.push(c);
    }
    let [a, b, c]: [(Rat, Rat); 3] = vertices.try_into().expect("three vertices");
    let tri = Triangle::new(a, b, c)?;
    let trace = |k: usize| -> Result<Trace, GeomError> {
        let side = Side::ALL[k / 2];
        let p = meet(&lines[k], &tri.sideline(side))?;
        tri.trace_of(side, &p)
    };
    let traces = TraceSet::new(trace(0)?, trace(2)?, trace(4)?)?;
    let primed = TraceSet::new(trace(1)?, trace(3)?, trace(5)?)?;
    build_configuration(tri, traces, Mode::Free(primed))
}

/// Six distinct random tangents of the unit circle.
pub fn gen_conic_first(spec: &GeneratorSpec, index: u64) -> Result<Generated, GeomError> {
    spec.validate()?;
    let mut rng = SplitMix64::for_cell(spec.seed, spec.stream(), index);
    with_redraws(&mut rng, |rng| {
        let t: [Rat; 6] = core::array::from_fn(|_| rng.rat(spec.bound));
        let cfg = conic_first_from_params(&t)?;
        ensure_generic(&cfg)?;
        Ok(cfg)
    })
}

/// Dispatches on the flavor of `spec`.
pub fn generate(spec: &GeneratorSpec, index: u64) -> Result<Generated, GeomError> {
    match spec.flavor {
        Flavor::TraceRandom => gen_trace_config(spec, index),
        Flavor::ConicFirst => gen_conic_first(spec, index),
    }
}

/// Moves one primed trace and rebuilds the configuration in free mode, so
/// the six lines are no longer tangent to one conic.
pub fn mutate(cfg: &Configuration, rng: &mut SplitMix64) -> Result<Configuration, GeomError> {
    let side = Side::ALL[rng.below(3) as usize];
    for _ in 0..MAX_REDRAWS {
        let delta = rng.nonzero_rat(9) / rat(10, 1);
        let (u, v) = cfg.primed_traces().get(side).weights();
        let v = v * (Rat::one() + delta);
        if v.is_zero() || (&u + &v).is_zero() {
            continue;
        }
        let moved = Trace::new(side, u, v)?;
        let p = cfg.primed_traces();
        let primed = match side {
            Side::A => TraceSet::new(moved, p.get(Side::B).clone(), p.get(Side::C).clone()),
            Side::B => TraceSet::new(p.get(Side::A).clone(), moved, p.get(Side::C).clone()),
            Side::C => TraceSet::new(p.get(Side::A).clone(), p.get(Side::B).clone(), moved),
        }?;
        let rebuilt = build_configuration(cfg.triangle().clone(), cfg.traces().clone(), Mode::Free(primed));
        if let Ok(m) = rebuilt {
            if ensure_generic(&m).is_ok() {
                return Ok(m);
            }
        }
    }
    Err(GeomError::GeneratorExhausted(MAX_REDRAWS))
}

/// Two triangles; perspective ones are `A' = A + s_A (P - A)` for a random
/// center `P`.
pub fn gen_perspective_pair(seed: u64, index: u64, perspective: bool, bound: u32) -> Result<(Triangle, Triangle), GeomError> {
    let stream = if perspective { 101 } else { 102 };
    let mut rng = SplitMix64::for_cell(seed, stream, index);
    for _ in 0..=MAX_REDRAWS {
        let Ok(t1) = random_triangle(&mut rng, bound) else { continue };
        let t2 = if perspective {
            let p = (rng.rat(bound), rng.rat(bound));
            let mut v = alloc::vec::Vec::with_capacity(3);
            for i in 0..3 {
                let (x, y) = t1.cartesian(i);
                let s = rng.nonzero_rat(bound);
                v.push((x + &s * (&p.0 - x), y + &s * (&p.1 - y)));
            }
            let [a, b, c]: [(Rat, Rat); 3] = v.try_into().expect("three vertices");
            Triangle::new(a, b, c)
        } else {
            random_triangle(&mut rng, bound)
        };
        let Ok(t2) = t2 else { continue };
        if super::checks::cross_points(&t1, &t2).is_ok() {
            return Ok((t1, t2));
        }
    }
    Err(GeomError::GeneratorExhausted(MAX_REDRAWS))
}

/// The perspective center of a pair, if the vertex joins concur.
pub fn perspector(t1: &Triangle, t2: &Triangle) -> Option<ProjPoint> {
    let l: alloc::vec::Vec<ProjLine> =
        (0..3).map(|i| join(t1.vertex(i), t2.vertex(i))).collect::<Result<_, _>>().ok()?;
    let p = meet(&l[0], &l[1]).ok()?;
    p.lies_on(&l[2]).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{is_tangent, on_conic, Conic};

    fn spec(mode: ModeTag, flavor: Flavor) -> GeneratorSpec {
        GeneratorSpec::new(1, 10, mode, flavor)
    }

    #[test]
    fn deterministic_per_index() {
        for mode in [ModeTag::Isogonal, ModeTag::Isotomic, ModeTag::Free] {
            let s = spec(mode, Flavor::TraceRandom);
            let a = gen_trace_config(&s, 0).unwrap();
            let b = gen_trace_config(&s, 0).unwrap();
            assert_eq!(super::super::fingerprint(&a.config), super::super::fingerprint(&b.config));
            let c = gen_trace_config(&s, 1).unwrap();
            assert_ne!(a.config, c.config);
        }
    }

    #[test]
    fn example_params_are_tangent_to_circle() {
        let t = [rat(0, 1), rat(4, 1), rat(1, 1), rat(-2, 1), rat(1, 3), rat(5, 1)];
        let cfg = conic_first_from_params(&t).unwrap();
        let dual = crate::dual_conic(&Conic::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap()).unwrap();
        for l in cfg.six_lines() {
            assert!(is_tangent(&l, &dual));
            assert_eq!(dual.eval(&l), BigInt::zero());
        }
        // contact point of the tangent at t = 1/3 is ((1-t²) : 2t : (1+t²))
        let contact = dual.contact_point(&cfg.six_lines()[4]).unwrap();
        assert_eq!(contact, ProjPoint::from_i64(8, 6, 10).unwrap());
        assert!(on_conic(&contact, &Conic::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, -1]]).unwrap()));
    }

    #[test]
    fn equal_params_rejected() {
        let t = [rat(0, 1), rat(4, 1), rat(1, 1), rat(4, 1), rat(1, 3), rat(5, 1)];
        assert!(matches!(conic_first_from_params(&t), Err(GeomError::DegenerateConfiguration(_))));
    }

    #[test]
    fn tiny_bound_is_valid_but_may_exhaust() {
        let mut s = spec(ModeTag::Isogonal, Flavor::TraceRandom);
        s.bound = 2;
        for i in 0..5 {
            match gen_trace_config(&s, i) {
                Ok(g) => assert!(ensure_generic(&g.config).is_ok()),
                Err(e) => assert_eq!(e, GeomError::GeneratorExhausted(MAX_REDRAWS)),
            }
        }
        s.bound = 1;
        assert!(matches!(gen_trace_config(&s, 0), Err(GeomError::InvalidSpec(_))));
    }

    #[test]
    fn conic_first_requires_free_mode() {
        let s = spec(ModeTag::Isogonal, Flavor::ConicFirst);
        assert!(matches!(gen_conic_first(&s, 0), Err(GeomError::InvalidSpec(_))));
        let s = spec(ModeTag::Free, Flavor::ConicFirst);
        assert!(gen_conic_first(&s, 0).is_ok());
    }

    #[test]
    fn perspective_pairs_have_a_perspector() {
        for i in 0..5 {
            let (a, b) = gen_perspective_pair(3, i, true, 20).unwrap();
            assert!(perspector(&a, &b).is_some());
            let (a, b) = gen_perspective_pair(3, i, false, 20).unwrap();
            assert!(perspector(&a, &b).is_none());
        }
    }
}
