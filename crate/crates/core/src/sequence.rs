//! The n-point approximation: three offset decompositions of the sequence
//! into disjoint triples, each stitched together with fixed-heading Dubins
//! connectors, keeping the cheapest.
//!
//! With `n = 3k` the best of the three costs at most `(1 + π/3 + ε)` times
//! the optimum: each decomposition pays at most `π·d` extra on the legs it
//! bridges with connectors, and the three bridged leg sets partition the
//! optimal path.

use crate::dubins::{concatenate, dubins_shortest, DubinsPath, Segment, POSITION_TOL};
use crate::error::{CspError, Result};
use crate::geometry::{Configuration, Point};
use crate::instance::Instance;
use crate::three_point::solve_three_point;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CandidateLabel {
    F1,
    F2,
    F3,
}

impl CandidateLabel {
    pub const ALL: [CandidateLabel; 3] = [CandidateLabel::F1, CandidateLabel::F2, CandidateLabel::F3];

    pub fn offset(self) -> usize {
        self as usize
    }

    pub fn from_offset(offset: usize) -> Option<Self> {
        Self::ALL.get(offset).copied()
    }
}

impl fmt::Display for CandidateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.offset() + 1)
    }
}

/// How a candidate covers the waypoints (indices are 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub offset: usize,
    pub triples: Vec<[usize; 3]>,
    pub connectors: Vec<(usize, usize)>,
    pub loose_segments: Vec<(usize, usize)>,
    pub free_heading_points: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
enum Block {
    /// A lone point whose heading is chosen freely.
    Single { index: usize, heading: f64 },
    /// Two points joined by a straight segment.
    Line { index: usize },
    Triple { index: usize },
}

impl Block {
    fn first(&self) -> usize {
        match *self {
            Block::Single { index, .. } | Block::Line { index } | Block::Triple { index } => index,
        }
    }

    fn last(&self) -> usize {
        match *self {
            Block::Single { index, .. } => index,
            Block::Line { index } => index + 1,
            Block::Triple { index } => index + 2,
        }
    }
}

fn blocks(points: &[Point], offset: usize) -> Vec<Block> {
    let n = points.len();
    let mut out = Vec::new();
    let mut i = match offset {
        0 => 0,
        1 => {
            out.push(Block::Single {
                index: 0,
                heading: points[0].bearing_to(points[1]),
            });
            1
        }
        _ => {
            out.push(Block::Line { index: 0 });
            2
        }
    };
    while i + 2 < n {
        out.push(Block::Triple { index: i });
        i += 3;
    }
    match n - i {
        0 => {}
        1 => out.push(Block::Single {
            index: i,
            heading: points[i - 1].bearing_to(points[i]),
        }),
        _ => out.push(Block::Line { index: i }),
    }
    out
}

/// Decomposition used by the candidate with the given offset (0, 1 or 2).
pub fn partition(n: usize, offset: usize, points: &[Point]) -> Partition {
    debug_assert_eq!(n, points.len());
    let bl = blocks(points, offset);
    let mut p = Partition {
        offset,
        triples: Vec::new(),
        connectors: Vec::new(),
        loose_segments: Vec::new(),
        free_heading_points: Vec::new(),
    };
    for (k, b) in bl.iter().enumerate() {
        match *b {
            Block::Single { index, .. } => p.free_heading_points.push(index),
            Block::Line { index } => p.loose_segments.push((index, index + 1)),
            Block::Triple { index } => p.triples.push([index, index + 1, index + 2]),
        }
        if let Some(next) = bl.get(k + 1) {
            p.connectors.push((b.last(), next.first()));
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceKind {
    ThreePoint,
    Connector,
    Line,
}

/// One piece of a candidate path, between waypoints `from` and `to`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub kind: PieceKind,
    pub from: usize,
    pub to: usize,
    pub cost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSolution {
    pub label: CandidateLabel,
    pub path: DubinsPath,
    pub cost: f64,
    pub ledger: Vec<LedgerEntry>,
    pub partition: Partition,
    /// Heading at every waypoint.
    pub headings: Vec<f64>,
    /// Arc length at which the path passes every waypoint.
    pub arclengths: Vec<f64>,
}

/// Builds the candidate whose triples start at `offset` (0 → F1, 1 → F2,
/// 2 → F3).
pub fn build_candidate(instance: &Instance, offset: usize, eps: f64) -> Result<CandidateSolution> {
    let label = CandidateLabel::from_offset(offset)
        .ok_or_else(|| CspError::InvalidParameter(format!("offset must be 0, 1 or 2, got {offset}")))?;
    let pts = instance.points();
    let rho = instance.rho();
    let n = pts.len();
    let bl = blocks(pts, offset);

    let mut headings = vec![0.0; n];
    let mut arclengths = vec![0.0; n];
    let mut pieces: Vec<DubinsPath> = Vec::new();
    let mut ledger = Vec::new();
    let mut travelled = 0.0;
    let mut prev_end: Option<Configuration> = None;

    for b in &bl {
        // the piece that covers this block, plus its start and end state
        let (piece, start) = match *b {
            Block::Single { index, heading } => {
                headings[index] = heading;
                (None, Configuration::at(pts[index], heading))
            }
            Block::Line { index } => {
                let heading = pts[index].bearing_to(pts[index + 1]);
                let len = pts[index].distance(pts[index + 1]);
                headings[index] = heading;
                headings[index + 1] = heading;
                let path = DubinsPath::from_segments(
                    Configuration::at(pts[index], heading),
                    Configuration::at(pts[index + 1], heading),
                    vec![Segment::straight(len)],
                    rho,
                    None,
                );
                let entry = LedgerEntry {
                    kind: PieceKind::Line,
                    from: index,
                    to: index + 1,
                    cost: path.length,
                };
                let start = path.start;
                (Some((path, entry, vec![0.0, len])), start)
            }
            Block::Triple { index } => {
                let sol = solve_three_point(pts[index], pts[index + 1], pts[index + 2], rho, eps).map_err(|e| match e {
                    CspError::SeparationViolation {
                        first,
                        second,
                        distance,
                        required,
                    } => CspError::SeparationViolation {
                        first: first + index,
                        second: second + index,
                        distance,
                        required,
                    },
                    e => e,
                })?;
                headings[index..index + 3].copy_from_slice(&sol.headings);
                let entry = LedgerEntry {
                    kind: PieceKind::ThreePoint,
                    from: index,
                    to: index + 2,
                    cost: sol.path.length,
                };
                let start = sol.path.start;
                (Some((sol.path, entry, sol.arclengths.to_vec())), start)
            }
        };

        if let Some(from) = prev_end {
            let connector = dubins_shortest(from, start, rho);
            ledger.push(LedgerEntry {
                kind: PieceKind::Connector,
                from: b.first() - 1,
                to: b.first(),
                cost: connector.length,
            });
            travelled += connector.length;
            pieces.push(connector);
        }
        match piece {
            Some((path, entry, local)) => {
                for (k, s) in local.iter().enumerate() {
                    arclengths[b.first() + k] = travelled + s;
                }
                travelled += path.length;
                prev_end = Some(path.end);
                ledger.push(entry);
                pieces.push(path);
            }
            None => {
                arclengths[b.first()] = travelled;
                prev_end = Some(start);
            }
        }
    }

    let path = if pieces.is_empty() {
        DubinsPath::empty(Configuration::at(pts[0], headings[0]), rho)
    } else {
        concatenate(&pieces)?
    };
    let cost = ledger.iter().map(|e| e.cost).sum();
    Ok(CandidateSolution {
        label,
        path,
        cost,
        ledger,
        partition: partition(n, offset, pts),
        headings,
        arclengths,
    })
}

/// `1 + π/3 + ε`: the worst-case ratio to the optimum for `n ≡ 0 (mod 3)`.
pub fn approximation_factor(eps: f64) -> f64 {
    1.0 + PI / 3.0 + eps
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub chosen: CandidateSolution,
    /// Costs of F1, F2, F3 in that order.
    pub candidate_costs: [f64; 3],
    pub candidates: Vec<CandidateSolution>,
    /// Sum of adjacent Euclidean distances; a guaranteed lower bound.
    pub euclidean_lb: f64,
    /// `chosen.cost / euclidean_lb`.
    pub a_posteriori_ratio: f64,
    pub eps: f64,
    /// Whether the worst-case factor applies (it needs `n ≡ 0 mod 3`).
    pub guarantee_applies: bool,
}

/// Runs all three constructions and keeps the cheapest (ties go to the
/// lower label).
pub fn solve_sequence(instance: &Instance, eps: f64) -> Result<SolutionReport> {
    if !(eps > 0.0) {
        return Err(CspError::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let candidates = (0..3)
        .map(|offset| build_candidate(instance, offset, eps))
        .collect::<Result<Vec<_>>>()?;
    let mut best = 0;
    for (i, c) in candidates.iter().enumerate() {
        if c.cost < candidates[best].cost {
            best = i;
        }
    }
    let euclidean_lb = crate::bounds::euclidean_lb(instance);
    let chosen = candidates[best].clone();
    Ok(SolutionReport {
        candidate_costs: [candidates[0].cost, candidates[1].cost, candidates[2].cost],
        a_posteriori_ratio: chosen.cost / euclidean_lb,
        chosen,
        candidates,
        euclidean_lb,
        eps,
        guarantee_applies: instance.len() % 3 == 0,
    })
}

/// Split of a path's cost over the three residue classes of legs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegPartition {
    /// Legs `p3i → p3i+1` (bridged by connectors in F1).
    pub l1: f64,
    /// Legs `p3i-2 → p3i-1` (bridged in F2).
    pub l2: f64,
    /// Legs `p3i-1 → p3i` (bridged in F3).
    pub l3: f64,
    pub total: f64,
}

impl LegPartition {
    pub fn min(&self) -> f64 {
        self.l1.min(self.l2).min(self.l3)
    }
}

/// Splits the cost of `reference` (any path visiting the waypoints in
/// order) into the three leg classes. Diagnostic only.
pub fn opt_partition_diagnostic(instance: &Instance, reference: &DubinsPath) -> Result<LegPartition> {
    let hits = reference
        .locate_waypoints(instance.points(), POSITION_TOL * instance.rho())
        .ok_or_else(|| CspError::Validation("reference path does not visit every waypoint in order".into()))?;
    let mut sums = [0.0; 3];
    for (j, w) in hits.windows(2).enumerate() {
        // leg j joins 0-based points j and j+1, i.e. 1-based j+1 → j+2
        let class = match j % 3 {
            2 => 0,
            0 => 1,
            _ => 2,
        };
        sums[class] += w[1] - w[0];
    }
    Ok(LegPartition {
        l1: sums[0],
        l2: sums[1],
        l3: sums[2],
        total: hits[hits.len() - 1] - hits[0],
    })
}
