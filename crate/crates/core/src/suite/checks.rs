use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{pair_fingerprint, Outcome, StatementId, Verdict, Witness};
use crate::config::ModeTag;
use crate::conic::conic_tangent_to_lines;
use crate::projective::cross;
use crate::triangle::Side;
use crate::{
    carnot_product, concurrent, conconic6_det, h_points, isogonal_conjugate, isotomic_conjugate, join, meet,
    Configuration, GeomError, ProjLine, ProjPoint, Rat, Triangle,
};
use crate::projective::{collinear_det, concurrent_det};

const SIX_LINES: [&str; 6] = ["holdout_lA", "holdout_lA'", "holdout_lB", "holdout_lB'", "holdout_lC", "holdout_lC'"];

fn w(name: &'static str, value: BigInt) -> Witness {
    Witness { name, value }
}

fn line(p: &ProjPoint, q: &ProjPoint, what: &str) -> Result<ProjLine, GeomError> {
    join(p, q).map_err(|_| GeomError::DegenerateConfiguration(format!("{what}: points coincide")))
}

/// `|p × q|²`: zero iff the two points are equal.
fn separation(p: &ProjPoint, q: &ProjPoint) -> BigInt {
    cross(p.coords(), q.coords()).iter().map(|c| c * c).sum()
}

fn cevians(cfg: &Configuration, points: &[ProjPoint; 3], what: &str) -> Result<[ProjLine; 3], GeomError> {
    let t = cfg.triangle();
    Ok([line(t.vertex(0), &points[0], what)?, line(t.vertex(1), &points[1], what)?, line(t.vertex(2), &points[2], what)?])
}

fn cevian_det(cfg: &Configuration, points: &[ProjPoint; 3], what: &str) -> Result<BigInt, GeomError> {
    let [a, b, c] = cevians(cfg, points, what)?;
    Ok(concurrent_det(&a, &b, &c))
}

pub fn theorem1_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    Ok(alloc::vec![
        w("AX,BY,CZ", cevian_det(cfg, cfg.hexagon(), "AX")?),
        w("AX',BY',CZ'", cevian_det(cfg, cfg.primed_hexagon(), "AX'")?),
    ])
}

/// Tangency residual of each line against the conic touching the other five.
pub fn tangent_conic_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    let lines = cfg.six_lines();
    let mut out = Vec::with_capacity(6);
    for h in 0..6 {
        let mut five = lines.iter().enumerate().filter(|&(k, _)| k != h).map(|(_, l)| l.clone());
        let five: [ProjLine; 5] = core::array::from_fn(|_| five.next().expect("five lines"));
        let dual = conic_tangent_to_lines(&five)?;
        out.push(w(SIX_LINES[h], dual.eval(&lines[h])));
    }
    Ok(out)
}

pub fn theorem2_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    let feet = h_points(cfg)?;
    let [h, hp] = [&feet.h, &feet.h_prime];
    let six = [h[0].clone(), hp[0].clone(), h[1].clone(), hp[1].clone(), h[2].clone(), hp[2].clone()];
    Ok(alloc::vec![
        w("AH_A,BH_B,CH_C", cevian_det(cfg, h, "AH_A")?),
        w("AH'_A,BH'_B,CH'_C", cevian_det(cfg, hp, "AH'_A")?),
        w("feet_conconic", conconic6_det(&six)),
    ])
}

pub fn theorem3_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    const LEMMA: [&str; 3] = ["lemma_YZ,Y'Z',BC", "lemma_ZX,Z'X',CA", "lemma_XY,X'Y',AB"];
    let (h, hp) = (cfg.hexagon(), cfg.primed_hexagon());
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        let (n, p) = ((i + 1) % 3, (i + 2) % 3);
        let a = line(&h[n], &h[p], "lemma")?;
        let b = line(&hp[n], &hp[p], "lemma")?;
        out.push(w(LEMMA[i], concurrent_det(&a, &b, &cfg.triangle().sideline(Side::ALL[i]))));
    }
    let persp = [cfg.perspectrix_point(0)?, cfg.perspectrix_point(1)?, cfg.perspectrix_point(2)?];
    out.push(w("perspectrix", collinear_det(&persp[0], &persp[1], &persp[2])));
    let diag: Vec<ProjLine> = (0..3).map(|i| line(&h[i], &hp[i], "XX'")).collect::<Result<_, _>>()?;
    out.push(w("XX',YY',ZZ'", concurrent_det(&diag[0], &diag[1], &diag[2])));
    let rr = line(cfg.r(), cfg.r_prime(), "RR'")?;
    out.push(w("Q_on_RR'", cfg.q().residual(&rr)));
    Ok(out)
}

pub fn theorem4_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    let six = cfg.six_traces();
    let carnot = carnot_product(cfg.triangle(), &six)? - Rat::one();
    Ok(alloc::vec![w("traces_conconic", conconic6_det(&six)), w("carnot_minus_one", carnot.numer().clone())])
}

/// Forward direction: the traces are conconic. Reverse: the conic touching
/// the first five lines also touches the sixth.
pub fn biconditional_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    let lines = cfg.six_lines();
    let five: [ProjLine; 5] = core::array::from_fn(|k| lines[k].clone());
    let dual = conic_tangent_to_lines(&five)?;
    Ok(alloc::vec![w("traces_conconic", conconic6_det(&cfg.six_traces())), w("sixth_tangent", dual.eval(&lines[5]))])
}

pub fn corollary1_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    const ON: [&str; 3] = ["A2_on_XX'", "B2_on_YY'", "C2_on_ZZ'"];
    let (h, hp) = (cfg.hexagon(), cfg.primed_hexagon());
    let mut out = Vec::with_capacity(5);
    let mut pappus = Vec::with_capacity(3);
    for i in 0..3 {
        let p = cfg.pappus_point(i)?;
        out.push(w(ON[i], collinear_det(&p, &h[i], &hp[i])));
        pappus.push(line(&p, &h[i], "A2X")?);
    }
    out.push(w("pappus_lines", concurrent_det(&pappus[0], &pappus[1], &pappus[2])));
    out.push(w("AA2,BB2,CC2", vertex_pappus_det(cfg)?));
    Ok(out)
}

pub fn corollary2_witnesses(cfg: &Configuration) -> Result<Vec<Witness>, GeomError> {
    let p = [cfg.pascal_point(0)?, cfg.pascal_point(1)?, cfg.pascal_point(2)?];
    Ok(alloc::vec![w("AA3,BB3,CC3", cevian_det(cfg, &p, "AA3")?)])
}

/// `R'` against the conjugate of `R` for the claimed pairing; empty for
/// free mode, which claims no pairing.
pub fn conjugate_witnesses(cfg: &Configuration, claimed: ModeTag) -> Result<Vec<Witness>, GeomError> {
    let t = cfg.triangle();
    let r = t.proj_to_bary(cfg.r());
    let conj = match claimed {
        ModeTag::Isogonal => isogonal_conjugate(t, &r)?,
        ModeTag::Isotomic => isotomic_conjugate(&r)?,
        ModeTag::Free => return Ok(Vec::new()),
    };
    Ok(alloc::vec![w("R'_vs_conjugate", separation(cfg.r_prime(), &t.bary_to_proj(&conj)))])
}

/// Witnesses of one statement without the mode gate.
pub fn witnesses_for(statement: StatementId, cfg: &Configuration, claimed: ModeTag) -> Result<Vec<Witness>, GeomError> {
    match statement {
        StatementId::Theorem1 => theorem1_witnesses(cfg),
        StatementId::TangentConic => tangent_conic_witnesses(cfg),
        StatementId::Theorem2 => theorem2_witnesses(cfg),
        StatementId::Theorem3 => theorem3_witnesses(cfg),
        StatementId::Theorem4 => theorem4_witnesses(cfg),
        StatementId::Biconditional => biconditional_witnesses(cfg),
        StatementId::Corollary1 => corollary1_witnesses(cfg),
        StatementId::Corollary2 => corollary2_witnesses(cfg),
        StatementId::ConjugateCenters => conjugate_witnesses(cfg, claimed),
        StatementId::Perspective => Err(GeomError::InvalidSpec(alloc::string::String::from(
            "the perspective statement is about triangle pairs",
        ))),
    }
}

pub(crate) fn all_witnesses(cfg: &Configuration, claimed: ModeTag) -> Result<Vec<Witness>, GeomError> {
    let mut out = Vec::new();
    for s in StatementId::CONFIG_STATEMENTS {
        out.extend(witnesses_for(s, cfg, claimed)?);
    }
    Ok(out)
}

/// Whether `statement` is claimed for configurations of this mode.
pub fn applicable(statement: StatementId, mode: ModeTag) -> bool {
    match statement {
        StatementId::Theorem2 => mode == ModeTag::Isogonal,
        StatementId::ConjugateCenters => mode != ModeTag::Free,
        StatementId::Perspective => false,
        _ => true,
    }
}

/// Gated check: not-applicable statements give an `NA` verdict.
pub fn check(statement: StatementId, cfg: &Configuration) -> Result<Verdict, GeomError> {
    let mode = cfg.mode().tag();
    if !applicable(statement, mode) {
        return Ok(Verdict::not_applicable(statement, cfg));
    }
    Ok(Verdict::from_witnesses(statement, cfg, witnesses_for(statement, cfg, mode)?))
}

pub fn check_theorem1(cfg: &Configuration) -> Verdict {
    // the cevians AX.. were already joined when the configuration was built
    check(StatementId::Theorem1, cfg).expect("hexagon points differ from the vertices")
}

pub fn check_tangent_conic(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::TangentConic, cfg)
}

pub fn check_theorem2(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Theorem2, cfg)
}

pub fn check_theorem3(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Theorem3, cfg)
}

pub fn check_theorem4(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Theorem4, cfg)
}

pub fn check_biconditional(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Biconditional, cfg)
}

pub fn check_corollary1(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Corollary1, cfg)
}

pub fn check_corollary2(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::Corollary2, cfg)
}

pub fn check_conjugate_centers(cfg: &Configuration) -> Result<Verdict, GeomError> {
    check(StatementId::ConjugateCenters, cfg)
}

/// Lines `AA2`, `BB2`, `CC2` through the Pappus points.
pub fn vertex_pappus_det(cfg: &Configuration) -> Result<BigInt, GeomError> {
    let p = [cfg.pappus_point(0)?, cfg.pappus_point(1)?, cfg.pappus_point(2)?];
    cevian_det(cfg, &p, "AA2")
}

fn pair_error(what: &str) -> GeomError {
    GeomError::DegeneratePair(alloc::string::String::from(what))
}

/// The six points where the sidelines of `t2` cross those of `t1`, in the
/// order `A1, A1', B1, B1', C1, C1'`: `A1 = C'A' ∩ BC`, `A1' = A'B' ∩ BC`,
/// and cyclically.
pub fn cross_points(t1: &Triangle, t2: &Triangle) -> Result<[ProjPoint; 6], GeomError> {
    let s1: [ProjLine; 3] = core::array::from_fn(|i| t1.sideline(Side::ALL[i]));
    let s2: [ProjLine; 3] = core::array::from_fn(|i| t2.sideline(Side::ALL[i]));
    for i in 0..3 {
        if t1.vertex(i).lies_on(&s2[i]) || t2.vertex(i).lies_on(&s1[i]) {
            return Err(pair_error("a vertex lies on the corresponding sideline of the other triangle"));
        }
    }
    let mut pts = Vec::with_capacity(6);
    for i in 0..3 {
        for k in [1, 2] {
            let p = meet(&s2[(i + k) % 3], &s1[i]).map_err(|_| pair_error("the triangles share a sideline"))?;
            if !p.is_finite() {
                return Err(pair_error("a cross point is at infinity"));
            }
            if t1.vertices().contains(&p) {
                return Err(pair_error("a cross point is a vertex"));
            }
            if pts.contains(&p) {
                return Err(pair_error("two cross points coincide"));
            }
            pts.push(p);
        }
    }
    Ok(pts.try_into().expect("six points"))
}

/// Verdict holds iff the two triangles are perspective exactly when the six
/// cross points are conconic.
pub fn check_perspective_iff_conconic(t1: &Triangle, t2: &Triangle) -> Result<Verdict, GeomError> {
    let pts = cross_points(t1, t2)?;
    let joins: Vec<ProjLine> = (0..3)
        .map(|i| join(t1.vertex(i), t2.vertex(i)).map_err(|_| pair_error("the triangles share a vertex")))
        .collect::<Result<_, _>>()?;
    let persp = concurrent_det(&joins[0], &joins[1], &joins[2]);
    let conc = conconic6_det(&pts);
    let outcome = if persp.is_zero() == conc.is_zero() { Outcome::Pass } else { Outcome::Fail };
    Ok(Verdict {
        statement: StatementId::Perspective,
        outcome,
        witnesses: alloc::vec![w("perspectivity", persp), w("conconic", conc)],
        fingerprint: pair_fingerprint(t1, t2),
        mode: None,
    })
}

/// Whether the three lines through the vertices and `points` concur.
pub fn cevians_concur(cfg: &Configuration, points: &[ProjPoint; 3]) -> Result<bool, GeomError> {
    let [a, b, c] = cevians(cfg, points, "cevian")?;
    Ok(concurrent(&a, &b, &c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::{gen_conic_first, gen_perspective_pair, gen_trace_config, mutate, Flavor, GeneratorSpec};
    use crate::rng::SplitMix64;
    use crate::{build_configuration, Mode, TraceSet};

    fn sample() -> Configuration {
        let t = Triangle::from_i64([(0, 0), (1, 0), (0, 1)]).unwrap();
        build_configuration(t, TraceSet::from_i64([(1, 2), (1, 2), (1, 2)]).unwrap(), Mode::Isogonal).unwrap()
    }

    fn all_hold(cfg: &Configuration) {
        for s in StatementId::CONFIG_STATEMENTS {
            let v = check(s, cfg).unwrap();
            assert_ne!(v.outcome, Outcome::Fail, "{s}: {:?}", v.witnesses);
        }
    }

    #[test]
    fn sample_config_passes_everything() {
        let cfg = sample();
        all_hold(&cfg);
        assert!(check_theorem1(&cfg).holds());
        assert!(check_theorem2(&cfg).unwrap().holds());
    }

    #[test]
    fn generated_configs_pass() {
        for (mode, flavor) in [
            (ModeTag::Isogonal, Flavor::TraceRandom),
            (ModeTag::Isotomic, Flavor::TraceRandom),
            (ModeTag::Free, Flavor::ConicFirst),
        ] {
            let spec = GeneratorSpec::new(7, 8, mode, flavor);
            for i in 0..8 {
                let g = if flavor == Flavor::ConicFirst { gen_conic_first(&spec, i) } else { gen_trace_config(&spec, i) };
                all_hold(&g.unwrap().config);
            }
        }
    }

    #[test]
    fn theorem2_is_na_outside_isogonal() {
        let spec = GeneratorSpec::new(7, 1, ModeTag::Isotomic, Flavor::TraceRandom);
        let cfg = gen_trace_config(&spec, 0).unwrap().config;
        assert_eq!(check_theorem2(&cfg).unwrap().outcome, Outcome::NotApplicable);
        let spec = GeneratorSpec::new(7, 1, ModeTag::Free, Flavor::ConicFirst);
        let cfg = gen_conic_first(&spec, 0).unwrap().config;
        assert_eq!(check_theorem2(&cfg).unwrap().outcome, Outcome::NotApplicable);
        assert_eq!(check_conjugate_centers(&cfg).unwrap().outcome, Outcome::NotApplicable);
    }

    #[test]
    fn free_random_traces_break_theorem1() {
        let spec = GeneratorSpec::new(11, 1, ModeTag::Free, Flavor::TraceRandom);
        let cfg = gen_trace_config(&spec, 0).unwrap().config;
        let v = check_theorem1(&cfg);
        assert_eq!(v.outcome, Outcome::Fail);
        assert!(!v.all_witnesses_zero());
        assert_eq!(check_theorem4(&cfg).unwrap().outcome, Outcome::Fail);
    }

    #[test]
    fn mutation_flips_biconditional_both_ways() {
        let spec = GeneratorSpec::new(5, 1, ModeTag::Free, Flavor::ConicFirst);
        let cfg = gen_conic_first(&spec, 0).unwrap().config;
        let mut rng = SplitMix64::new(9);
        let m = mutate(&cfg, &mut rng).unwrap();
        let v = check_biconditional(&m).unwrap();
        assert_eq!(v.outcome, Outcome::Fail);
        assert!(v.witnesses.iter().all(|w| !w.value.is_zero()));
    }

    #[test]
    fn perspective_pairs_agree() {
        for i in 0..10 {
            let (a, b) = gen_perspective_pair(1, i, true, 20).unwrap();
            let v = check_perspective_iff_conconic(&a, &b).unwrap();
            assert!(v.all_witnesses_zero(), "{:?}", v.witnesses);
            let (a, b) = gen_perspective_pair(1, i, false, 20).unwrap();
            let v = check_perspective_iff_conconic(&a, &b).unwrap();
            assert!(v.holds());
            assert!(v.witnesses.iter().all(|w| !w.value.is_zero()));
        }
    }

    #[test]
    fn medial_triangle_is_excluded() {
        let t = Triangle::from_i64([(0, 0), (4, 0), (0, 6)]).unwrap();
        let m = Triangle::from_i64([(2, 3), (0, 3), (2, 0)]).unwrap();
        assert!(matches!(check_perspective_iff_conconic(&t, &m), Err(GeomError::DegeneratePair(_))));
    }
}
