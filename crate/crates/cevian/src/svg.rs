//! SVG 1.1 figure of a configuration.

use std::fmt::Write;

use cevian_core::{conic_through_points, conic_tangent_to_lines, Configuration, ProjLine, ProjPoint};

/// Samples taken along the pencil of lines through the base point.
pub const CONIC_SAMPLES: usize = 512;

const WIDTH: f64 = 800.0;

#[derive(Clone, Copy, Debug)]
struct View {
    min: [f64; 2],
    max: [f64; 2],
    scale: f64,
}

impl View {
    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        ((p[0] - self.min[0]) * self.scale, (self.max[1] - p[1]) * self.scale)
    }

    fn height(&self) -> f64 {
        (self.max[1] - self.min[1]) * self.scale
    }

    fn contains(&self, p: [f64; 2], slack: f64) -> bool {
        let w = (self.max[0] - self.min[0]) * slack;
        let h = (self.max[1] - self.min[1]) * slack;
        p[0] >= self.min[0] - w && p[0] <= self.max[0] + w && p[1] >= self.min[1] - h && p[1] <= self.max[1] + h
    }
}

fn xy(p: &ProjPoint) -> Option<[f64; 2]> {
    p.to_f64().map(|(x, y)| [x, y])
}

fn view_for(cfg: &Configuration) -> View {
    let verts: Vec<[f64; 2]> = cfg.triangle().vertices().iter().filter_map(xy).collect();
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    let grow = |p: [f64; 2], min: &mut [f64; 2], max: &mut [f64; 2]| {
        for i in 0..2 {
            min[i] = min[i].min(p[i]);
            max[i] = max[i].max(p[i]);
        }
    };
    for &v in &verts {
        grow(v, &mut min, &mut max);
    }
    let size = (max[0] - min[0]).max(max[1] - min[1]);
    let center = [(min[0] + max[0]) / 2.0, (min[1] + max[1]) / 2.0];
    // nearby construction points are kept in frame; far ones are not
    let extra = cfg
        .hexagon()
        .iter()
        .chain(cfg.primed_hexagon())
        .chain([cfg.r(), cfg.r_prime(), cfg.q()])
        .chain(cfg.trace_points())
        .chain(cfg.primed_trace_points());
    for p in extra.filter_map(xy) {
        if (p[0] - center[0]).abs() <= 2.0 * size && (p[1] - center[1]).abs() <= 2.0 * size {
            grow(p, &mut min, &mut max);
        }
    }
    let margin = 0.12 * (max[0] - min[0]).max(max[1] - min[1]);
    let min = [min[0] - margin, min[1] - margin];
    let max = [max[0] + margin, max[1] + margin];
    View { min, max, scale: WIDTH / (max[0] - min[0]) }
}

/// Segment of the line `a x + b y + c = 0` inside the view.
fn clip_line(l: &ProjLine, v: &View) -> Option<([f64; 2], [f64; 2])> {
    let [a, b, c] = l.to_f64_scaled();
    let n2 = a * a + b * b;
    if n2 == 0.0 {
        return None;
    }
    let center = [(v.min[0] + v.max[0]) / 2.0, (v.min[1] + v.max[1]) / 2.0];
    let off = (a * center[0] + b * center[1] + c) / n2;
    let p0 = [center[0] - a * off, center[1] - b * off];
    let d = [b / n2.sqrt(), -a / n2.sqrt()];
    // Liang–Barsky on p0 + t d
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..2 {
        if d[i].abs() < 1e-15 {
            if p0[i] < v.min[i] || p0[i] > v.max[i] {
                return None;
            }
            continue;
        }
        let (ta, tb) = ((v.min[i] - p0[i]) / d[i], (v.max[i] - p0[i]) / d[i]);
        t0 = t0.max(ta.min(tb));
        t1 = t1.min(ta.max(tb));
    }
    (t0 < t1).then(|| ([p0[0] + t0 * d[0], p0[1] + t0 * d[1]], [p0[0] + t1 * d[0], p0[1] + t1 * d[1]]))
}

/// Points of the conic `m` as polylines, following the pencil of lines
/// through the point `base` on it. Each line meets the conic once more at
/// `base + t v` with `t = -2 (baseᵀ M v) / (vᵀ M v)`.
fn sample_conic(m: &[[num_bigint::BigInt; 3]; 3], base: [f64; 2], view: &View) -> Vec<Vec<[f64; 2]>> {
    let flat: Vec<num_bigint::BigInt> = m.iter().flatten().cloned().collect();
    let mf = scaled(&flat);
    let at = |i: usize, j: usize| mf[3 * i + j];
    let p = [base[0], base[1], 1.0];
    let mut runs: Vec<Vec<[f64; 2]>> = vec![Vec::new()];
    for j in 0..=CONIC_SAMPLES {
        let theta = std::f64::consts::PI * j as f64 / CONIC_SAMPLES as f64;
        let v = [theta.cos(), theta.sin(), 0.0];
        let mut pmv = 0.0;
        let mut vmv = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                pmv += p[a] * at(a, b) * v[b];
                vmv += v[a] * at(a, b) * v[b];
            }
        }
        let q = if vmv.abs() > 1e-12 {
            let t = -2.0 * pmv / vmv;
            Some([p[0] + t * v[0], p[1] + t * v[1]])
        } else {
            None
        };
        match q {
            Some(q) if view.contains(q, 0.5) => runs.last_mut().expect("nonempty").push(q),
            _ => {
                if !runs.last().expect("nonempty").is_empty() {
                    runs.push(Vec::new());
                }
            }
        }
    }
    runs.retain(|r| r.len() >= 2);
    runs
}

fn scaled(v: &[num_bigint::BigInt]) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let bits = v.iter().map(|x| x.bits()).max().unwrap_or(0);
    let shift = bits.saturating_sub(60);
    v.iter().map(|x| (x >> shift).to_f64().unwrap_or(0.0)).collect()
}

fn polyline(out: &mut String, class: &str, run: &[[f64; 2]], view: &View) {
    let pts: Vec<String> = run
        .iter()
        .map(|&p| {
            let (x, y) = view.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polyline class="{class}" points="{}"/>"#, pts.join(" "));
}

fn labeled_point(out: &mut String, class: &str, label: &str, p: &ProjPoint, view: &View) {
    match xy(p) {
        Some(w) => {
            let (x, y) = view.map(w);
            let _ = writeln!(out, r#"  <circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
            let _ = writeln!(
                out,
                r#"  <text class="label" x="{:.3}" y="{:.3}">{label}</text>"#,
                x + 5.0,
                y - 5.0
            );
        }
        None => {
            let _ = writeln!(out, "  <!-- {label} is at infinity -->");
        }
    }
}

/// The figure: triangle, six cevian lines, hexagon, centers, the conic
/// touching the six lines and the conic through the six traces.
pub fn render(cfg: &Configuration) -> String {
    let view = view_for(cfg);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{h:.0}" viewBox="0 0 {WIDTH:.0} {h:.3}">"#,
        h = view.height()
    );
    out.push_str(concat!(
        "  <style>\n",
        "    .triangle { fill: none; stroke: black; stroke-width: 1.5 }\n",
        "    .cevian { stroke: #1f77b4; stroke-width: 0.8 }\n",
        "    .cevian.primed { stroke: #d62728 }\n",
        "    .conic { fill: none; stroke-width: 1 }\n",
        "    .inscribed { stroke: #2ca02c }\n",
        "    .traces { stroke: #9467bd; stroke-dasharray: 4 3 }\n",
        "    .label { font: 13px sans-serif }\n",
        "  </style>\n"
    ));

    let pts: Vec<String> = cfg
        .triangle()
        .vertices()
        .iter()
        .filter_map(xy)
        .map(|p| {
            let (x, y) = view.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polygon class="triangle" points="{}"/>"#, pts.join(" "));

    const LINE_NAMES: [&str; 6] = ["lA", "lA′", "lB", "lB′", "lC", "lC′"];
    for (k, l) in cfg.six_lines().iter().enumerate() {
        let class = if k % 2 == 0 { "cevian" } else { "cevian primed" };
        match clip_line(l, &view) {
            Some((a, b)) => {
                let ((x1, y1), (x2, y2)) = (view.map(a), view.map(b));
                let _ = writeln!(
                    out,
                    r#"  <line class="{class}" data-name="{}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#,
                    LINE_NAMES[k]
                );
            }
            None => {
                let _ = writeln!(out, "  <!-- {} misses the frame -->", LINE_NAMES[k]);
            }
        }
    }

    let lines = cfg.six_lines();
    let five: [ProjLine; 5] = std::array::from_fn(|k| lines[k].clone());
    let inscribed = conic_tangent_to_lines(&five).ok().and_then(|d| {
        let c = d.point_conic().ok()?;
        let base = lines.iter().filter_map(|l| d.contact_point(l).ok()).find_map(|p| xy(&p))?;
        Some((c, base))
    });
    match inscribed {
        Some((c, base)) => {
            for run in sample_conic(c.matrix(), base, &view) {
                polyline(&mut out, "conic inscribed", &run, &view);
            }
        }
        None => out.push_str("  <!-- the six lines do not determine a proper conic -->\n"),
    }
    let traces = cfg.six_traces();
    let five: [ProjPoint; 5] = std::array::from_fn(|k| traces[k].clone());
    let through = conic_through_points(&five).ok().and_then(|c| Some((c, xy(&traces[0])?)));
    match through {
        Some((c, base)) => {
            for run in sample_conic(c.matrix(), base, &view) {
                polyline(&mut out, "conic traces", &run, &view);
            }
        }
        None => out.push_str("  <!-- the six traces do not determine a conic -->\n"),
    }

    for (i, name) in ["A", "B", "C"].iter().enumerate() {
        labeled_point(&mut out, "vertex", name, cfg.triangle().vertex(i), &view);
    }
    for (i, name) in ["A1", "A1′", "B1", "B1′", "C1", "C1′"].iter().enumerate() {
        labeled_point(&mut out, "trace", name, &traces[i], &view);
    }
    for (i, name) in ["X", "Y", "Z"].iter().enumerate() {
        labeled_point(&mut out, "hexagon", name, &cfg.hexagon()[i], &view);
    }
    for (i, name) in ["X′", "Y′", "Z′"].iter().enumerate() {
        labeled_point(&mut out, "hexagon", name, &cfg.primed_hexagon()[i], &view);
    }
    labeled_point(&mut out, "center", "R", cfg.r(), &view);
    labeled_point(&mut out, "center", "R′", cfg.r_prime(), &view);
    labeled_point(&mut out, "center", "Q", cfg.q(), &view);
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cevian_core::{build_configuration, Mode, TraceSet, Triangle};

    fn sample() -> Configuration {
        let t = Triangle::from_i64([(0, 0), (1, 0), (0, 1)]).unwrap();
        build_configuration(t, TraceSet::from_i64([(1, 2), (1, 2), (1, 2)]).unwrap(), Mode::Isogonal).unwrap()
    }

    #[test]
    fn sample_figure_has_every_element() {
        let s = render(&sample());
        assert_eq!(s.matches("<polygon").count(), 1);
        assert_eq!(s.matches(r#"<line class="cevian"#).count(), 6);
        for label in ["X", "Y", "Z", "X′", "Y′", "Z′", "R", "R′", "Q"] {
            assert!(s.contains(&format!(">{label}</text>")), "{label}");
        }
        let inscribed: usize = s
            .lines()
            .filter(|l| l.contains(r#"class="conic inscribed""#))
            .map(|l| l.matches(',').count())
            .sum();
        assert!(inscribed >= 256, "{inscribed}");
        assert!(s.contains(r#"class="conic traces""#));
        assert_eq!(s, render(&sample()));
    }

    #[test]
    fn inscribed_conic_samples_lie_on_it() {
        let cfg = sample();
        let lines = cfg.six_lines();
        let five: [ProjLine; 5] = std::array::from_fn(|k| lines[k].clone());
        let d = conic_tangent_to_lines(&five).unwrap();
        let c = d.point_conic().unwrap();
        let base = xy(&d.contact_point(&lines[0]).unwrap()).unwrap();
        let view = view_for(&cfg);
        let flat: Vec<num_bigint::BigInt> = c.matrix().iter().flatten().cloned().collect();
        let m = scaled(&flat);
        for run in sample_conic(c.matrix(), base, &view) {
            for p in run {
                let v = [p[0], p[1], 1.0];
                let q: f64 = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).map(|(a, b)| v[a] * m[3 * a + b] * v[b]).sum();
                assert!(q.abs() < 1e-9, "{q}");
            }
        }
    }

    #[test]
    fn clipped_lines_stay_in_view() {
        let cfg = sample();
        let view = view_for(&cfg);
        for l in cfg.six_lines() {
            let (a, b) = clip_line(&l, &view).unwrap();
            assert!(view.contains(a, 1e-9) && view.contains(b, 1e-9));
        }
    }
}
