//! Benchmark harness: random instances per size, ratio statistics, CSV.

use crate::bounds::{euclidean_lb, heading_grid_dp, GridMode, HeadingGrid};
use crate::error::{CspError, Result};
use crate::instance::{default_extent, generate};
use crate::sequence::{approximation_factor, solve_sequence};
use std::io::Write;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub count: usize,
    pub rho: f64,
    pub eps: f64,
    pub intervals: usize,
    pub seed: u64,
    /// When false the runtime column is written as `NA`, so the CSV is
    /// byte-identical across runs.
    pub record_timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![12, 15, 18, 21, 24, 27, 30],
            count: 100,
            rho: 100.0,
            eps: 1e-4,
            intervals: 32,
            seed: 0,
            record_timing: true,
        }
    }
}

/// Seed of the `j`-th instance of size `n`.
pub fn instance_seed(master: u64, n: usize, j: usize) -> u64 {
    master.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 32) ^ j as u64
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceResult {
    pub n: usize,
    pub seed: u64,
    pub cost: f64,
    pub euclidean_lb: f64,
    pub grid_proxy_lb: f64,
    pub runtime_ms: f64,
}

impl InstanceResult {
    pub fn ratio(&self) -> f64 {
        self.cost / self.grid_proxy_lb
    }

    pub fn ratio_euclidean(&self) -> f64 {
        self.cost / self.euclidean_lb
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub count: usize,
    pub max_ratio: f64,
    pub avg_ratio: f64,
    pub max_ratio_euclidean: f64,
    pub avg_ratio_euclidean: f64,
    pub avg_runtime_ms: Option<f64>,
}

/// Solves one generated instance and computes its bounds. The runtime
/// covers the solve only.
pub fn run_instance(n: usize, j: usize, cfg: &BenchConfig) -> Result<InstanceResult> {
    let seed = instance_seed(cfg.seed, n, j);
    let inst = generate(n, cfg.rho, default_extent(n, cfg.rho), seed)?;
    let grid = HeadingGrid::new(cfg.intervals)?;
    let t = Instant::now();
    let report = solve_sequence(&inst, cfg.eps)?;
    let runtime_ms = t.elapsed().as_secs_f64() * 1e3;
    Ok(InstanceResult {
        n,
        seed,
        cost: report.chosen.cost,
        euclidean_lb: euclidean_lb(&inst),
        grid_proxy_lb: heading_grid_dp(&inst, &grid, GridMode::ProxyLb),
        runtime_ms,
    })
}

fn validate(cfg: &BenchConfig) -> Result<()> {
    if cfg.sizes.is_empty() || cfg.sizes.iter().any(|&n| n < 3) {
        return Err(CspError::InvalidParameter("sizes must be a non-empty list of values ≥ 3".into()));
    }
    if cfg.count == 0 {
        return Err(CspError::InvalidParameter("count must be positive".into()));
    }
    if !(cfg.eps > 0.0) {
        return Err(CspError::InvalidParameter(format!("eps must be positive, got {}", cfg.eps)));
    }
    HeadingGrid::new(cfg.intervals)?;
    Ok(())
}

/// Runs every instance. Results are ordered by size, then instance index.
pub fn run_instances(cfg: &BenchConfig) -> Result<Vec<InstanceResult>> {
    validate(cfg)?;
    let jobs: Vec<(usize, usize)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.count).map(move |j| (n, j)))
        .collect();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter().map(|&(n, j)| run_instance(n, j, cfg)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(|&(n, j)| run_instance(n, j, cfg)).collect()
    }
}

pub fn summarize(cfg: &BenchConfig, results: &[InstanceResult]) -> Vec<BenchRow> {
    cfg.sizes
        .iter()
        .map(|&n| {
            let rs: Vec<_> = results.iter().filter(|r| r.n == n).collect();
            let k = rs.len() as f64;
            BenchRow {
                n,
                count: rs.len(),
                max_ratio: rs.iter().map(|r| r.ratio()).fold(f64::NEG_INFINITY, f64::max),
                avg_ratio: rs.iter().map(|r| r.ratio()).sum::<f64>() / k,
                max_ratio_euclidean: rs.iter().map(|r| r.ratio_euclidean()).fold(f64::NEG_INFINITY, f64::max),
                avg_ratio_euclidean: rs.iter().map(|r| r.ratio_euclidean()).sum::<f64>() / k,
                avg_runtime_ms: cfg
                    .record_timing
                    .then(|| rs.iter().map(|r| r.runtime_ms).sum::<f64>() / k),
            }
        })
        .collect()
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let results = run_instances(cfg)?;
    Ok(summarize(cfg, &results))
}

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "count",
    "eps",
    "theoretical_bound",
    "max_ratio",
    "avg_ratio",
    "max_ratio_euclidean",
    "avg_ratio_euclidean",
    "avg_runtime_ms",
    "ratio_lb",
];

/// Writes the table as RFC 4180 CSV with a header row.
///
/// `theoretical_bound` is `1 + π/3` to four decimals; the `eps` column holds
/// the solver tolerance that adds to it. `max_ratio` and `avg_ratio` are
/// against the grid proxy, which is not a guaranteed bound (`ratio_lb`
/// says so on every row); the `_euclidean` columns are guaranteed.
pub fn write_csv<W: Write>(cfg: &BenchConfig, rows: &[BenchRow], out: W) -> Result<()> {
    let io = |e: csv::Error| CspError::Validation(format!("failed to write CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.count.to_string(),
            format!("{:e}", cfg.eps),
            format!("{:.4}", approximation_factor(0.0)),
            format!("{:.6}", r.max_ratio),
            format!("{:.6}", r.avg_ratio),
            format!("{:.6}", r.max_ratio_euclidean),
            format!("{:.6}", r.avg_ratio_euclidean),
            r.avg_runtime_ms.map_or("NA".to_string(), |t| format!("{t:.3}")),
            "grid_proxy_nonguaranteed".to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| CspError::Validation(format!("failed to write CSV: {e}")))?;
    Ok(())
}
