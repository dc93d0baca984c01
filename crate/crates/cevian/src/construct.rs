//! Every named object of a configuration as canonical integer triples.

use cevian_core::{derived_points, Configuration, ProjLine, ProjPoint};
use serde_json::{json, Map, Value};

use crate::input::rat_text;

fn triple(c: &[num_bigint::BigInt; 3]) -> Value {
    Value::Array(c.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn point(p: &ProjPoint) -> Value {
    triple(p.coords())
}

pub fn line(l: &ProjLine) -> Value {
    triple(l.coords())
}

fn named<T>(names: &[&str], items: &[T], f: impl Fn(&T) -> Value) -> Value {
    let mut m = Map::new();
    for (n, x) in names.iter().zip(items) {
        m.insert((*n).to_string(), f(x));
    }
    Value::Object(m)
}

/// A point that may be undefined in special configurations.
fn maybe(p: Result<ProjPoint, cevian_core::GeomError>) -> Value {
    p.map(|p| point(&p)).unwrap_or(Value::Null)
}

pub fn document(cfg: &Configuration) -> Value {
    let t = cfg.triangle();
    let weights: Vec<Value> = cfg
        .traces()
        .iter()
        .chain(cfg.primed_traces().iter())
        .map(|tr| {
            let (u, v) = tr.weights();
            json!([rat_text(&u), rat_text(&v)])
        })
        .collect();
    let feet = match cfg.feet() {
        Some(f) => {
            let all = [&f.h[0], &f.h[1], &f.h[2], &f.h_prime[0], &f.h_prime[1], &f.h_prime[2]];
            named(&["H_A", "H_B", "H_C", "H'_A", "H'_B", "H'_C"], &all, |p| point(p))
        }
        None => Value::Null,
    };
    let derived = derived_points(cfg).ok();
    let group = |f: &dyn Fn(usize) -> Result<ProjPoint, cevian_core::GeomError>, names: [&str; 3]| {
        let mut m = Map::new();
        for (i, n) in names.iter().enumerate() {
            m.insert((*n).to_string(), maybe(f(i)));
        }
        Value::Object(m)
    };
    let vertices = t.vertices();
    json!({
        "mode": cfg.mode().tag().name(),
        "triangle": named(&["A", "B", "C"], vertices, point),
        "cartesian": named(&["A", "B", "C"], &[0, 1, 2], |&i| {
            let (x, y) = t.cartesian(i);
            json!([rat_text(x), rat_text(y)])
        }),
        "weights": named(&["A1", "B1", "C1", "A1'", "B1'", "C1'"], &weights, |w| w.clone()),
        "traces": named(&["A1", "A1'", "B1", "B1'", "C1", "C1'"], &cfg.six_traces(), point),
        "lines": named(&["lA", "lA'", "lB", "lB'", "lC", "lC'"], &cfg.six_lines(), line),
        "hexagon": named(
            &["X", "Y", "Z", "X'", "Y'", "Z'"],
            &[cfg.hexagon().as_slice(), cfg.primed_hexagon().as_slice()].concat(),
            point
        ),
        "R": point(cfg.r()),
        "R'": point(cfg.r_prime()),
        "Q": point(cfg.q()),
        "feet": feet,
        "perspectrix": group(&|i| cfg.perspectrix_point(i), ["A'", "B'", "C'"]),
        "pappus": group(&|i| cfg.pappus_point(i), ["A2", "B2", "C2"]),
        "pascal": group(&|i| cfg.pascal_point(i), ["A3", "B3", "C3"]),
        "complete": derived.is_some() && cfg.feet().is_some(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(cfg: &Configuration) -> String {
    let mut s = serde_json::to_string_pretty(&document(cfg)).expect("serializable");
    s.push('\n');
    s
}
