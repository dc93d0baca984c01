//! Samples of the angle family as CSV.

use std::fmt::Write;

use cevian_core::morley::{build_numeric_config, d_of_k, q_of_k, r_of_k, KParam, MorleyError, NumBary, NumTri};

pub const HEADER: &str = "k,x,y,z,cartesian_x,cartesian_y";

/// Rows always present, whatever the grid.
pub const ANCHORS: [f64; 6] = [-1.0, 0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    /// Concurrence point of `AX`, `BY`, `CZ`.
    R,
    /// Concurrence point of the lines to the perpendicular feet.
    D,
    /// Common point of `XX'`, `YY'`, `ZZ'`, `RR'`.
    Q,
}

impl Curve {
    pub fn parse(s: &str) -> Option<Curve> {
        match s {
            "r" | "R" => Some(Curve::R),
            "d" | "D" => Some(Curve::D),
            "q" | "Q" => Some(Curve::Q),
            _ => None,
        }
    }

    fn eval(self, tri: &NumTri, k: KParam) -> Result<NumBary, MorleyError> {
        match self {
            Curve::R => r_of_k(tri, k),
            Curve::D => d_of_k(tri, k),
            Curve::Q => q_of_k(tri, k),
        }
    }
}

/// `-1, -0.95, …, 1`.
pub fn default_grid() -> Vec<f64> {
    (0..=40).map(|i| f64::from(i) / 20.0 - 1.0).collect()
}

/// Grid plus anchors, sorted, without repeats. Fails on any `k` outside `[-1, 1]`.
pub fn full_grid(grid: &[f64]) -> Result<Vec<f64>, MorleyError> {
    for &k in grid {
        KParam::new(k)?;
    }
    let mut all: Vec<f64> = grid.iter().copied().chain(ANCHORS).collect();
    all.sort_by(f64::total_cmp);
    all.dedup();
    Ok(all)
}

fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv(tri: &NumTri, grid: &[f64], curve: Curve) -> Result<String, MorleyError> {
    let ks = full_grid(grid)?;
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for k in ks {
        match curve.eval(tri, KParam::new(k)?) {
            Ok(b) => {
                let [x, y, z] = b.coords();
                let [cx, cy] = tri.to_cartesian(&b);
                let _ = writeln!(out, "{},{},{},{},{},{}", sci(k), sci(x), sci(y), sci(z), sci(cx), sci(cy));
            }
            Err(e) => {
                let _ = writeln!(out, "# k={} skipped: {e}", sci(k));
            }
        }
    }
    Ok(out)
}

/// Largest barycentric distance between the constructed `R` and the closed
/// form over the grid points where the construction is defined.
pub fn construction_deviation(tri: &NumTri, grid: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for &k in grid {
        let Ok(kp) = KParam::new(k) else { continue };
        let (Ok(cfg), Ok(f)) = (build_numeric_config(tri, kp), r_of_k(tri, kp)) else { continue };
        if let Ok(r) = tri.to_bary(cfg.r) {
            worst = worst.max(r.max_diff(&f));
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use cevian_core::morley::{centers, TAU};

    fn tri345() -> NumTri {
        NumTri::new([0.0, 0.0], [4.0, 0.0], [0.0, 3.0]).unwrap()
    }

    fn row(csv: &str, k: f64) -> Vec<f64> {
        let key = format!("{k:.16e},");
        let line = csv.lines().find(|l| l.starts_with(&key)).expect("row present");
        line.split(',').map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn default_grid_has_incenter_row() {
        let t = tri345();
        let s = csv(&t, &default_grid(), Curve::R).unwrap();
        assert!(s.starts_with("k,x,y,z,cartesian_x,cartesian_y\n"));
        let r = row(&s, 0.5);
        let inc = centers::incenter(&t).coords();
        for i in 0..3 {
            assert!((r[i + 1] - inc[i]).abs() < TAU);
        }
        // cartesian incenter of the 3-4-5 triangle is (1, 1)
        assert!((r[4] - 1.0).abs() < 1e-12 && (r[5] - 1.0).abs() < 1e-12);
        // right angle at A: R(-1) is at infinity
        assert!(s.contains("# k=-1.0000000000000000e0 skipped"));
    }

    #[test]
    fn empty_grid_gives_anchor_rows() {
        let s = csv(&tri345(), &[], Curve::R).unwrap();
        assert_eq!(s.lines().count(), 1 + ANCHORS.len());
    }

    #[test]
    fn out_of_range_grid_is_rejected() {
        assert_eq!(full_grid(&[0.2, 1.5]), Err(MorleyError::InvalidK(1.5)));
    }

    #[test]
    fn d_and_q_curves() {
        let t = NumTri::new([0.0, 0.0], [5.0, 0.0], [1.0, 3.0]).unwrap();
        let d = csv(&t, &[], Curve::D).unwrap();
        let g = centers::gergonne(&t).coords();
        let r = row(&d, 0.5);
        assert!((0..3).all(|i| (r[i + 1] - g[i]).abs() < TAU));
        let q = csv(&t, &[0.25], Curve::Q).unwrap();
        assert!(q.contains("# k=-1.0000000000000000e0 skipped"));
        assert_eq!(row(&q, 0.0)[1..4], row(&csv(&t, &[], Curve::R).unwrap(), 0.0)[1..4]);
        assert!(construction_deviation(&t, &default_grid()) < TAU);
    }
}
