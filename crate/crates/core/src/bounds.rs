//! Lower and upper bounds on the optimal waypoint-path cost.
//!
//! The Euclidean bound is guaranteed. The heading-grid DP gives a feasible
//! path (upper mode) and a finer-grid proxy for a lower bound (proxy mode);
//! the proxy is not a proven bound.

use crate::dubins::{concatenate, dubins_length_table, dubins_shortest, DubinsPath};
use crate::error::{CspError, Result};
use crate::geometry::{Configuration, Point};
use crate::instance::Instance;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Sub-samples per interval used by the proxy mode.
pub const PROXY_REFINEMENT: usize = 4;

/// Uniform partition of `[0, 2π)` into headings intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadingGrid {
    intervals: usize,
}

impl Default for HeadingGrid {
    fn default() -> Self {
        Self { intervals: 32 }
    }
}

impl HeadingGrid {
    pub fn new(intervals: usize) -> Result<Self> {
        if intervals < 2 {
            return Err(CspError::InvalidParameter(format!(
                "heading grid needs at least 2 intervals, got {intervals}"
            )));
        }
        Ok(Self { intervals })
    }

    pub fn intervals(&self) -> usize {
        self.intervals
    }

    /// Left end of each interval.
    pub fn representatives(&self) -> Vec<f64> {
        self.subdivided(1)
    }

    /// `k` evenly spaced headings inside each interval, interval-major.
    pub fn subdivided(&self, k: usize) -> Vec<f64> {
        let total = self.intervals * k;
        (0..total).map(|j| TAU * j as f64 / total as f64).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridMode {
    /// Exact Dubins edges between grid headings: the cost of a real path.
    Upper,
    /// Each edge is the minimum over a finer sub-grid of its interval pair.
    ProxyLb,
}

/// Sum of adjacent Euclidean distances.
pub fn euclidean_lb(instance: &Instance) -> f64 {
    instance.points().windows(2).map(|w| w[0].distance(w[1])).sum()
}

/// Edge weights for one leg, row-major over (heading at `from`, heading at `to`).
fn leg_table(from: Point, to: Point, grid: &HeadingGrid, mode: GridMode, rho: f64) -> Vec<f64> {
    let n = grid.intervals();
    match mode {
        GridMode::Upper => {
            let h = grid.representatives();
            dubins_length_table(from, to, &h, &h, rho)
        }
        GridMode::ProxyLb => {
            let k = PROXY_REFINEMENT;
            let h = grid.subdivided(k);
            let fine = dubins_length_table(from, to, &h, &h, rho);
            let mut out = vec![f64::INFINITY; n * n];
            for (r, row) in fine.chunks_exact(n * k).enumerate() {
                let base = (r / k) * n;
                for (c, &v) in row.iter().enumerate() {
                    let cell = &mut out[base + c / k];
                    if v < *cell {
                        *cell = v;
                    }
                }
            }
            out
        }
    }
}

fn leg_tables(instance: &Instance, grid: &HeadingGrid, mode: GridMode) -> Vec<Vec<f64>> {
    let pts = instance.points();
    let rho = instance.rho();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..pts.len() - 1)
            .into_par_iter()
            .map(|i| leg_table(pts[i], pts[i + 1], grid, mode, rho))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        pts.windows(2).map(|w| leg_table(w[0], w[1], grid, mode, rho)).collect()
    }
}

/// Result of the layered-graph DP.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSolution {
    pub cost: f64,
    /// Grid index of the heading chosen at every waypoint.
    pub heading_indices: Vec<usize>,
    pub mode: GridMode,
}

/// Layered shortest path over grid headings at every waypoint.
/// Ties go to the lowest heading index.
pub fn heading_grid_solve(instance: &Instance, grid: &HeadingGrid, mode: GridMode) -> GridSolution {
    let n = grid.intervals();
    let tables = leg_tables(instance, grid, mode);
    let mut cost = vec![0.0; n];
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(tables.len());
    for table in &tables {
        let mut next = vec![f64::INFINITY; n];
        let mut arg = vec![0usize; n];
        for (a, &ca) in cost.iter().enumerate() {
            let row = &table[a * n..(a + 1) * n];
            for b in 0..n {
                let v = ca + row[b];
                if v < next[b] {
                    next[b] = v;
                    arg[b] = a;
                }
            }
        }
        cost = next;
        back.push(arg);
    }
    let mut last = 0;
    for (b, &c) in cost.iter().enumerate() {
        if c < cost[last] {
            last = b;
        }
    }
    let mut indices = vec![last];
    for arg in back.iter().rev() {
        let prev = arg[*indices.last().unwrap()];
        indices.push(prev);
    }
    indices.reverse();
    GridSolution {
        cost: cost[last],
        heading_indices: indices,
        mode,
    }
}

/// Value of the heading-grid DP in the given mode.
pub fn heading_grid_dp(instance: &Instance, grid: &HeadingGrid, mode: GridMode) -> f64 {
    heading_grid_solve(instance, grid, mode).cost
}

/// The feasible path behind the upper-mode value.
pub fn grid_witness_path(instance: &Instance, grid: &HeadingGrid) -> Result<DubinsPath> {
    let sol = heading_grid_solve(instance, grid, GridMode::Upper);
    let h = grid.representatives();
    let configs: Vec<_> = instance
        .points()
        .iter()
        .zip(&sol.heading_indices)
        .map(|(&p, &i)| Configuration::at(p, h[i]))
        .collect();
    let legs: Vec<_> = configs
        .windows(2)
        .map(|w| dubins_shortest(w[0], w[1], instance.rho()))
        .collect();
    concatenate(&legs)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Guarantees {
    pub euclidean: bool,
    pub grid_proxy: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub euclidean_lb: f64,
    pub grid_proxy_lb: f64,
    pub grid_upper_witness: f64,
    pub intervals: usize,
    pub guaranteed: Guarantees,
}

pub fn compute_bounds(instance: &Instance, grid: &HeadingGrid) -> BoundReport {
    BoundReport {
        euclidean_lb: euclidean_lb(instance),
        grid_proxy_lb: heading_grid_dp(instance, grid, GridMode::ProxyLb),
        grid_upper_witness: heading_grid_dp(instance, grid, GridMode::Upper),
        intervals: grid.intervals(),
        guaranteed: Guarantees {
            euclidean: true,
            grid_proxy: false,
        },
    }
}
