//! Shortest bounded-curvature path through three points.
//!
//! With adjacent points at least `2ρ` apart, the optimal path is
//! straight–arc–straight with the middle point on the arc. Which way the arc
//! turns follows from the side of the `p2 → p3` line that `p1` lies on. The
//! remaining unknown is the heading at `p2`; the total length is strictly
//! convex in that heading between its two discontinuities, and its
//! derivative is `ρ·(cos turn12 − cos turn23)`, so the minimizer is found by
//! bisection on the sign of that expression.

use crate::dubins::{cs_with_turn, sc_with_turn, DubinsPath, PathWord, Segment, Turn};
use crate::error::{CspError, Result};
use crate::geometry::{mod2pi, Configuration, Point, RigidMotion};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Number of uniform steps used to bracket the optimal heading.
pub const SCAN_STEPS: usize = 256;
/// Hard cap on bisection iterations.
pub const MAX_ITERATIONS: usize = 200;
/// `|y1|` below this multiple of `ρ` counts as collinear.
pub const COLLINEAR_TOL: f64 = 1e-9;

/// The three points expressed in a frame with `p2` at the origin and `p3`
/// on the positive x axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalFrame {
    /// Maps world coordinates into the frame.
    pub to_local: RigidMotion,
    /// Maps frame coordinates back to the world.
    pub to_world: RigidMotion,
    pub d12: f64,
    pub d23: f64,
    /// `p1` in frame coordinates.
    pub p1: Point,
    /// `p3` in frame coordinates, always `(d23, 0)`.
    pub p3: Point,
    pub y1_sign: i8,
    pub rho: f64,
}

/// Shape of the optimal three-point path, decided by which side of the
/// p2→p3 line p1 lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThreePointClass {
    Sls,
    Srs,
    /// `p1` on the x axis ahead of `p2`: either turn direction may win.
    Both,
    /// `p1`, `p2`, `p3` collinear in order: a straight line.
    Straight,
}

/// Lengths and turn angles of the two one-sided legs for a heading at `p2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreePointGeometry {
    /// Heading at `p2` in the canonical frame.
    pub theta: f64,
    /// Length of the straight-then-arc leg into `p2`.
    pub d1: f64,
    /// Length of the arc-then-straight leg out of `p2`.
    pub d2: f64,
    pub turn12: f64,
    pub turn23: f64,
    pub l12: f64,
    pub l23: f64,
    /// Heading of the incoming straight segment.
    pub heading_in: f64,
    /// Heading of the outgoing straight segment.
    pub heading_out: f64,
}

impl ThreePointGeometry {
    pub fn total(&self) -> f64 {
        self.d1 + self.d2
    }

    /// `cos(turn12) − cos(turn23)`; the length derivative divided by `ρ`,
    /// taken along the direction in which the turn angle at `p2` grows.
    pub fn slope(&self) -> f64 {
        self.turn12.cos() - self.turn23.cos()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreePointSolution {
    pub path: DubinsPath,
    /// World headings at `p1`, `p2`, `p3`.
    pub headings: [f64; 3],
    /// Arc length at which the path passes each point.
    pub arclengths: [f64; 3],
    pub word: PathWord,
    pub turn12: f64,
    pub turn23: f64,
    /// `|turn12 − turn23|`; zero at an interior optimum.
    pub certificate_residual: f64,
    pub iterations: usize,
    /// Whether the optimum was located as an interior root of the slope.
    pub interior: bool,
}

impl ThreePointSolution {
    pub fn length(&self) -> f64 {
        self.path.length
    }
}

fn separation_error(first: usize, distance: f64, rho: f64) -> CspError {
    CspError::SeparationViolation {
        first,
        second: first + 1,
        distance,
        required: 2.0 * rho,
    }
}

/// Moves the points into the frame used by the solver.
pub fn canonicalize(p1: Point, p2: Point, p3: Point, rho: f64) -> Result<CanonicalFrame> {
    if !(rho > 0.0) {
        return Err(CspError::InvalidParameter(format!("turning radius must be positive, got {rho}")));
    }
    let d12 = p1.distance(p2);
    let d23 = p2.distance(p3);
    let min = 2.0 * rho * (1.0 - 1e-12);
    if !(d12 >= min) {
        return Err(separation_error(0, d12, rho));
    }
    if !(d23 >= min) {
        return Err(separation_error(1, d23, rho));
    }
    let angle = (p3.y - p2.y).atan2(p3.x - p2.x);
    let to_world = RigidMotion::new(angle, p2.x, p2.y);
    let to_local = to_world.inverse();
    let local1 = to_local.apply(p1);
    let y1_sign = if local1.y.abs() < COLLINEAR_TOL * rho {
        0
    } else if local1.y > 0.0 {
        1
    } else {
        -1
    };
    Ok(CanonicalFrame {
        to_local,
        to_world,
        d12,
        d23,
        p1: local1,
        p3: Point::new(d23, 0.0),
        y1_sign,
        rho,
    })
}

pub fn classify(frame: &CanonicalFrame) -> ThreePointClass {
    match frame.y1_sign {
        -1 => ThreePointClass::Srs,
        1 => ThreePointClass::Sls,
        _ if frame.p1.x > 0.0 => ThreePointClass::Both,
        _ => ThreePointClass::Straight,
    }
}

/// Legs into and out of `p2` for heading `theta`, both turning to `side`.
pub fn length_profile(frame: &CanonicalFrame, theta: f64, side: Turn) -> Result<ThreePointGeometry> {
    let infeasible = || CspError::InfeasibleHeading {
        side: side.as_char(),
        theta,
    };
    if !theta.is_finite() {
        return Err(infeasible());
    }
    let at_p2 = Configuration::new(0.0, 0.0, theta);
    let rho = frame.rho;
    let into = sc_with_turn(frame.p1, at_p2, rho, side).ok_or_else(infeasible)?;
    let out = cs_with_turn(at_p2, frame.p3, rho, side).ok_or_else(infeasible)?;
    Ok(ThreePointGeometry {
        theta,
        d1: into.length(rho),
        d2: out.length(rho),
        turn12: into.arc,
        turn23: out.arc,
        l12: into.straight,
        l23: out.straight,
        heading_in: into.line_heading,
        heading_out: out.line_heading,
    })
}

/// Outcome of the one-dimensional search for one turn side.
#[derive(Debug, Clone, Copy)]
struct SideOptimum {
    geometry: ThreePointGeometry,
    iterations: usize,
    interior: bool,
}

/// Upper end of the search interval: the bearing of `p1 → p2` measured
/// in the direction of the turn. Over `[0, upper]` both legs vary
/// continuously; outside it one of them wraps through a full turn.
pub fn search_interval(frame: &CanonicalFrame, side: Turn) -> f64 {
    let sign = match side {
        Turn::Right => 1.0,
        Turn::Left => -1.0,
    };
    mod2pi((-sign * frame.p1.y).atan2(-frame.p1.x))
}

/// Bisection iteration bound implied by the stopping rule for this frame.
pub fn iteration_bound(frame: &CanonicalFrame, side: Turn, eps: f64) -> usize {
    let width = search_interval(frame, side) / SCAN_STEPS as f64;
    let theta_tol = eps * (frame.d12 + frame.d23) / (2.0 * frame.rho);
    (width / theta_tol).log2().ceil().max(0.0) as usize
}

fn optimize_side(frame: &CanonicalFrame, side: Turn, eps: f64) -> Result<SideOptimum> {
    let sign = match side {
        Turn::Right => 1.0,
        Turn::Left => -1.0,
    };
    let rho = frame.rho;
    // `phi` runs over [0, upper]; the heading at p2 is sign·phi
    let eval = |phi: f64| length_profile(frame, sign * phi, side);
    let upper = search_interval(frame, side);

    let scan = (0..=SCAN_STEPS)
        .map(|k| eval(upper * k as f64 / SCAN_STEPS as f64))
        .collect::<Result<Vec<_>>>()?;
    let best_scanned = scan
        .iter()
        .copied()
        .min_by(|a, b| a.total().total_cmp(&b.total()))
        .expect("scan is nonempty");

    let mut best: Option<SideOptimum> = None;
    for k in 0..SCAN_STEPS {
        let (a, b) = (scan[k], scan[k + 1]);
        if !(a.slope() <= 0.0 && b.slope() > 0.0) {
            continue;
        }
        let mut lo = upper * k as f64 / SCAN_STEPS as f64;
        let mut hi = upper * (k + 1) as f64 / SCAN_STEPS as f64;
        let (mut g_lo, mut g_hi) = (a.slope(), b.slope());
        let mut iterations = 0;
        loop {
            let mid = 0.5 * (lo + hi);
            let at_mid = eval(mid)?;
            // the slope is monotone on the bracket, so no point in it is
            // more than ρ·width·max|slope| shorter than any other
            let gap = rho * (hi - lo) * g_lo.abs().max(g_hi.abs());
            if gap <= eps * at_mid.total() || iterations >= MAX_ITERATIONS {
                break;
            }
            let g = at_mid.slope();
            if g <= 0.0 {
                lo = mid;
                g_lo = g;
            } else {
                hi = mid;
                g_hi = g;
            }
            iterations += 1;
        }
        // secant estimate of the root inside the final bracket
        let phi = if g_hi > g_lo {
            lo + (hi - lo) * (-g_lo / (g_hi - g_lo))
        } else {
            0.5 * (lo + hi)
        };
        let geometry = eval(phi.clamp(lo, hi))?;
        if best.map_or(true, |b| geometry.total() < b.geometry.total()) {
            best = Some(SideOptimum {
                geometry,
                iterations,
                interior: true,
            });
        }
    }

    match best {
        Some(b) if b.geometry.total() <= best_scanned.total() => Ok(b),
        _ => {
            // no bracket, or the optimum sits at an end of the interval:
            // golden-section refinement around the best scanned heading
            let step = upper / SCAN_STEPS as f64;
            let center = (best_scanned.theta * sign).clamp(0.0, upper);
            let (mut lo, mut hi) = ((center - step).max(0.0), (center + step).min(upper));
            let ratio = (5f64.sqrt() - 1.0) / 2.0;
            let mut iterations = 0;
            while hi - lo > 1e-12 && iterations < MAX_ITERATIONS {
                let a = hi - ratio * (hi - lo);
                let b = lo + ratio * (hi - lo);
                if eval(a)?.total() < eval(b)?.total() {
                    hi = b;
                } else {
                    lo = a;
                }
                iterations += 1;
            }
            let refined = eval(0.5 * (lo + hi))?;
            let geometry = if refined.total() < best_scanned.total() {
                refined
            } else {
                best_scanned
            };
            Ok(SideOptimum {
                geometry,
                iterations,
                interior: false,
            })
        }
    }
}

fn build_solution(frame: &CanonicalFrame, side: Turn, opt: SideOptimum, p1: Point, p3: Point) -> ThreePointSolution {
    let g = opt.geometry;
    let rho = frame.rho;
    let rotation = frame.to_world.angle;
    let turn_total = g.turn12 + g.turn23;
    let mut segments = vec![Segment::straight(g.l12)];
    if turn_total <= TAU {
        segments.push(Segment::arc(side, turn_total));
    } else {
        segments.push(Segment::arc(side, g.turn12));
        segments.push(Segment::arc(side, g.turn23));
    }
    segments.push(Segment::straight(g.l23));
    let headings = [
        mod2pi(g.heading_in + rotation),
        mod2pi(g.theta + rotation),
        mod2pi(g.heading_out + rotation),
    ];
    let word = match side {
        Turn::Left => PathWord::Sls,
        Turn::Right => PathWord::Srs,
    };
    let path = DubinsPath::from_segments(
        Configuration::at(p1, headings[0]),
        Configuration::at(p3, headings[2]),
        segments,
        rho,
        Some(word),
    );
    ThreePointSolution {
        arclengths: [0.0, g.d1, path.length],
        path,
        headings,
        word,
        turn12: g.turn12,
        turn23: g.turn23,
        certificate_residual: (g.turn12 - g.turn23).abs(),
        iterations: opt.iterations,
        interior: opt.interior,
    }
}

/// Path through `p1`, `p2`, `p3` within a factor `1 + eps` of the shortest.
pub fn solve_three_point(p1: Point, p2: Point, p3: Point, rho: f64, eps: f64) -> Result<ThreePointSolution> {
    if !(eps > 0.0) {
        return Err(CspError::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let frame = canonicalize(p1, p2, p3, rho)?;
    let sides: &[Turn] = match classify(&frame) {
        ThreePointClass::Straight => return Ok(straight_solution(&frame, p1, p3)),
        ThreePointClass::Srs => &[Turn::Right],
        ThreePointClass::Sls => &[Turn::Left],
        ThreePointClass::Both => &[Turn::Right, Turn::Left],
    };
    let mut best: Option<(Turn, SideOptimum)> = None;
    for &side in sides {
        let opt = optimize_side(&frame, side, eps)?;
        if best.map_or(true, |(_, b)| opt.geometry.total() < b.geometry.total()) {
            best = Some((side, opt));
        }
    }
    let (side, opt) = best.expect("at least one side is searched");
    Ok(build_solution(&frame, side, opt, p1, p3))
}

fn straight_solution(frame: &CanonicalFrame, p1: Point, p3: Point) -> ThreePointSolution {
    let heading = p1.bearing_to(p3);
    let length = frame.d12 + frame.d23;
    let path = DubinsPath::from_segments(
        Configuration::at(p1, heading),
        Configuration::at(p3, heading),
        vec![Segment::straight(length)],
        frame.rho,
        Some(PathWord::S),
    );
    ThreePointSolution {
        path,
        headings: [heading; 3],
        arclengths: [0.0, frame.d12, length],
        word: PathWord::S,
        turn12: 0.0,
        turn23: 0.0,
        certificate_residual: 0.0,
        iterations: 0,
        interior: false,
    }
}
