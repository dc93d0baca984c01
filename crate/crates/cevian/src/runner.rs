//! Parallel driver of the theorem suite.

use std::time::{Duration, Instant};

use cevian_core::suite::{run_cell, run_pair_cell, GeneratorSpec, SuiteReport};
use cevian_core::GeomError;
use rayon::prelude::*;

/// Runs every instance of `spec` on the rayon pool. The result does not
/// depend on scheduling since cells are merged into sorted order.
pub fn run_parallel(spec: &GeneratorSpec) -> Result<SuiteReport, GeomError> {
    spec.validate()?;
    Ok((0..spec.count as u64)
        .into_par_iter()
        .map(|i| run_cell(spec, i))
        .reduce(SuiteReport::default, SuiteReport::merge))
}

/// `n` perspective pairs and `n` independent random pairs.
pub fn run_pairs(seed: u64, n: usize, bound: u32) -> SuiteReport {
    (0..n as u64)
        .into_par_iter()
        .flat_map_iter(|i| [run_pair_cell(seed, i, true, bound), run_pair_cell(seed, i, false, bound)])
        .reduce(SuiteReport::default, SuiteReport::merge)
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}
