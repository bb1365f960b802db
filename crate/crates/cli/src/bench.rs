//! Timing the dynamic program on seeded random interval graphs.

use std::time::Instant;

use nsn_core::generators::{generate_connected, GeneratorSpec};
use nsn_core::{arrangement_from_intervals, compute_nsn_from_intervals, NsnOptions};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    /// Maximal cliques of the first instance at this size.
    pub cliques: usize,
    pub trials: usize,
    pub mean_secs: f64,
    pub min_secs: f64,
    pub max_secs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(mean time) against log(n).
    pub exponent: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    pub threads: usize,
    /// Endpoints are drawn from `0..=coord_factor * n`.
    pub coord_factor: i64,
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    if config.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let options = NsnOptions { fallback_oracle: false, threads: config.threads };
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let mut times = Vec::with_capacity(config.trials);
        let mut cliques = 0;
        for trial in 0..config.trials {
            let max_coord = (config.coord_factor * n as i64).max(2);
            let spec = GeneratorSpec::random(n, config.seed.wrapping_add(trial as u64), max_coord);
            let rep = generate_connected(&spec)?;
            if trial == 0 {
                cliques = arrangement_from_intervals(&rep).len();
            }
            let start = Instant::now();
            compute_nsn_from_intervals(&rep, &options)?;
            times.push(start.elapsed().as_secs_f64());
        }
        rows.push(BenchRow {
            n,
            cliques,
            trials: config.trials,
            mean_secs: times.iter().sum::<f64>() / times.len() as f64,
            min_secs: times.iter().copied().fold(f64::INFINITY, f64::min),
            max_secs: times.iter().copied().fold(0.0, f64::max),
        });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.mean_secs)).collect();
    Ok(BenchReport { seed: config.seed, rows, exponent: fit_exponent(&points) })
}

/// Slope of the least-squares line through `(ln x, ln y)`. Needs two
/// distinct positive `x` values and positive `y` values.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> =
        points.iter().filter(|&&(x, y)| x > 0.0 && y > 0.0).map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (logs.len() >= 2 && sxx > 1e-12).then(|| sxy / sxx)
}
