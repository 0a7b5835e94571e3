//! Two-point Dubins paths and one-sided (free heading) variants.
//!
//! Paths are built only from arcs of radius `rho` and straight lines, so the
//! curvature bound holds by construction. Headings follow the usual
//! convention: measured counter-clockwise from the +x axis, left turns
//! increase the heading.

use crate::error::{CspError, Result};
use crate::geometry::{angle_distance, arc_extent, mod2pi, Configuration, Point, ANGLE_EPS};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::fmt;

/// Position tolerance (relative to `rho`) for endpoint and continuity checks.
pub const POSITION_TOL: f64 = 1e-6;
/// Heading tolerance (radians) for continuity checks.
pub const HEADING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn mirrored(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }

    pub(crate) fn as_char(self) -> char {
        match self {
            Turn::Left => 'L',
            Turn::Right => 'R',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentKind {
    Left,
    Right,
    Straight,
}

impl From<Turn> for SegmentKind {
    fn from(t: Turn) -> Self {
        match t {
            Turn::Left => SegmentKind::Left,
            Turn::Right => SegmentKind::Right,
        }
    }
}

impl SegmentKind {
    pub fn letter(self) -> char {
        match self {
            SegmentKind::Left => 'L',
            SegmentKind::Right => 'R',
            SegmentKind::Straight => 'S',
        }
    }
}

/// One primitive piece of a path. Arc extents are in radians, straight
/// extents in length units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub extent: f64,
}

impl Segment {
    pub fn arc(turn: Turn, extent: f64) -> Self {
        Self {
            kind: turn.into(),
            extent,
        }
    }

    pub fn straight(length: f64) -> Self {
        Self {
            kind: SegmentKind::Straight,
            extent: length,
        }
    }

    pub fn length(&self, rho: f64) -> f64 {
        match self.kind {
            SegmentKind::Straight => self.extent,
            _ => rho * self.extent,
        }
    }

    fn is_nonzero(&self, rho: f64) -> bool {
        match self.kind {
            SegmentKind::Straight => self.extent > ANGLE_EPS * rho,
            _ => self.extent > ANGLE_EPS,
        }
    }
}

/// Segment-type signature of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathWord {
    // two-point words, in lexicographic order (used for tie-breaking)
    Lrl,
    Lsl,
    Lsr,
    Rlr,
    Rsl,
    Rsr,
    // one-sided words
    Ls,
    Rs,
    Sl,
    Sr,
    S,
    // three-point words
    Sls,
    Srs,
}

impl PathWord {
    pub const TWO_POINT: [PathWord; 6] = [
        PathWord::Lrl,
        PathWord::Lsl,
        PathWord::Lsr,
        PathWord::Rlr,
        PathWord::Rsl,
        PathWord::Rsr,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PathWord::Lrl => "LRL",
            PathWord::Lsl => "LSL",
            PathWord::Lsr => "LSR",
            PathWord::Rlr => "RLR",
            PathWord::Rsl => "RSL",
            PathWord::Rsr => "RSR",
            PathWord::Ls => "LS",
            PathWord::Rs => "RS",
            PathWord::Sl => "SL",
            PathWord::Sr => "SR",
            PathWord::S => "S",
            PathWord::Sls => "SLS",
            PathWord::Srs => "SRS",
        }
    }

    /// The word with every left turn replaced by a right turn and vice versa.
    pub fn mirrored(self) -> PathWord {
        use PathWord::*;
        match self {
            Lrl => Rlr,
            Rlr => Lrl,
            Lsl => Rsr,
            Rsr => Lsl,
            Lsr => Rsl,
            Rsl => Lsr,
            Ls => Rs,
            Rs => Ls,
            Sl => Sr,
            Sr => Sl,
            S => S,
            Sls => Srs,
            Srs => Sls,
        }
    }

    /// Segment kinds of a two-point word.
    pub fn kinds(self) -> Option<[SegmentKind; 3]> {
        use SegmentKind::{Left as L, Right as R, Straight as S};
        Some(match self {
            PathWord::Lsl => [L, S, L],
            PathWord::Rsr => [R, S, R],
            PathWord::Lsr => [L, S, R],
            PathWord::Rsl => [R, S, L],
            PathWord::Rlr => [R, L, R],
            PathWord::Lrl => [L, R, L],
            _ => return None,
        })
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A curvature-feasible path made of `rho`-arcs and straight segments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DubinsPath {
    pub start: Configuration,
    /// Declared end configuration (the target the path was built for).
    pub end: Configuration,
    pub segments: Vec<Segment>,
    pub rho: f64,
    pub length: f64,
    /// `None` for concatenations of several paths.
    pub word: Option<PathWord>,
}

/// Moves `q` along a single segment.
pub fn advance(q: Configuration, kind: SegmentKind, extent: f64, rho: f64) -> Configuration {
    match kind {
        SegmentKind::Straight => {
            let p = q.position().offset(q.heading, extent);
            Configuration::at(p, q.heading)
        }
        SegmentKind::Left => {
            let c = q.left_center(rho);
            let h = q.heading + extent;
            Configuration::new(c.x + rho * h.sin(), c.y - rho * h.cos(), h)
        }
        SegmentKind::Right => {
            let c = q.right_center(rho);
            let h = q.heading - extent;
            Configuration::new(c.x - rho * h.sin(), c.y + rho * h.cos(), h)
        }
    }
}

impl DubinsPath {
    pub(crate) fn from_segments(
        start: Configuration,
        end: Configuration,
        segments: Vec<Segment>,
        rho: f64,
        word: Option<PathWord>,
    ) -> Self {
        let length = segments.iter().map(|s| s.length(rho)).sum();
        Self {
            start,
            end,
            segments,
            rho,
            length,
            word,
        }
    }

    /// A zero-length path sitting at `q`.
    pub fn empty(q: Configuration, rho: f64) -> Self {
        Self::from_segments(q, q, Vec::new(), rho, None)
    }

    /// Configuration reached by integrating all segments from `start`.
    pub fn integrate(&self) -> Configuration {
        self.segments
            .iter()
            .fold(self.start, |q, s| advance(q, s.kind, s.extent, self.rho))
    }

    /// Distance between the integrated and the declared end position.
    pub fn endpoint_error(&self) -> f64 {
        self.integrate().position().distance(self.end.position())
    }

    pub fn nonzero_segments(&self) -> usize {
        self.segments.iter().filter(|s| s.is_nonzero(self.rho)).count()
    }

    /// Configuration at arc length `s` (clamped to `[0, length]`).
    pub fn config_at(&self, s: f64) -> Configuration {
        let mut q = self.start;
        let mut left = s.max(0.0);
        for seg in &self.segments {
            let len = seg.length(self.rho);
            if left <= len {
                let extent = match seg.kind {
                    SegmentKind::Straight => left,
                    _ => left / self.rho,
                };
                return advance(q, seg.kind, extent, self.rho);
            }
            left -= len;
            q = advance(q, seg.kind, seg.extent, self.rho);
        }
        q
    }

    /// Arc lengths at which the path passes each of `points`, in order.
    ///
    /// Each point is matched to the earliest position after the previous
    /// match that lies within `tol` of it. Returns `None` if some point is
    /// never reached.
    pub fn locate_waypoints(&self, points: &[Point], tol: f64) -> Option<Vec<f64>> {
        let mut hits = Vec::with_capacity(points.len());
        let mut seg_idx = 0;
        let mut seg_start = self.start;
        let mut seg_s = 0.0;
        let mut offset = 0.0;
        'points: for &p in points {
            while seg_idx < self.segments.len() {
                let seg = self.segments[seg_idx];
                if let Some(u) = earliest_hit(seg_start, seg, self.rho, offset, p, tol) {
                    offset = u;
                    hits.push(seg_s + seg_local_length(seg, u, self.rho));
                    continue 'points;
                }
                seg_s += seg.length(self.rho);
                seg_start = advance(seg_start, seg.kind, seg.extent, self.rho);
                seg_idx += 1;
                offset = 0.0;
            }
            // past the last segment: only the final configuration remains
            if seg_start.position().distance(p) <= tol {
                hits.push(self.length);
                continue;
            }
            return None;
        }
        Some(hits)
    }
}

fn seg_local_length(seg: Segment, u: f64, rho: f64) -> f64 {
    match seg.kind {
        SegmentKind::Straight => u,
        _ => u * rho,
    }
}

/// Smallest local parameter `u ≥ offset` on `seg` whose point is within
/// `tol` of `p`.
fn earliest_hit(q: Configuration, seg: Segment, rho: f64, offset: f64, p: Point, tol: f64) -> Option<f64> {
    let mut cands = vec![offset, seg.extent];
    match seg.kind {
        SegmentKind::Straight => {
            let (s, c) = q.heading.sin_cos();
            cands.push((p.x - q.x) * c + (p.y - q.y) * s);
        }
        SegmentKind::Left => {
            let ctr = q.left_center(rho);
            let phi0 = q.heading - PI / 2.0;
            let phi = (p.y - ctr.y).atan2(p.x - ctr.x);
            cands.push(mod2pi(phi - phi0));
        }
        SegmentKind::Right => {
            let ctr = q.right_center(rho);
            let phi0 = q.heading + PI / 2.0;
            let phi = (p.y - ctr.y).atan2(p.x - ctr.x);
            cands.push(mod2pi(phi0 - phi));
        }
    }
    cands
        .into_iter()
        .map(|u| u.clamp(offset, seg.extent.max(offset)))
        .filter(|&u| advance(q, seg.kind, u, rho).position().distance(p) <= tol)
        .min_by(|a, b| a.total_cmp(b))
}

/// Headings and distance of a pair of configurations in the frame where the
/// start sits at the origin and the goal on the +x axis, scaled by `1/rho`.
#[derive(Debug, Clone, Copy)]
struct Normalized {
    alpha: f64,
    beta: f64,
    sa: f64,
    ca: f64,
    sb: f64,
    cb: f64,
    d: f64,
}

impl Normalized {
    fn new(a: &Configuration, b: &Configuration, rho: f64) -> Self {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let d = dx.hypot(dy) / rho;
        let theta = if d > 0.0 { mod2pi(dy.atan2(dx)) } else { 0.0 };
        let alpha = mod2pi(a.heading - theta);
        let beta = mod2pi(b.heading - theta);
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        Self {
            alpha,
            beta,
            sa,
            ca,
            sb,
            cb,
            d,
        }
    }
}

/// Normalized segment parameters `[t, p, q]` of `word`, or `None` when the
/// word has no valid solution for this pair.
fn word_params(word: PathWord, n: &Normalized) -> Option<[f64; 3]> {
    let Normalized {
        alpha,
        beta,
        sa,
        ca,
        sb,
        cb,
        d,
    } = *n;
    let c_ab = ca * cb + sa * sb;
    let sqrt_clamped = |x: f64| {
        if x < -1e-10 {
            None
        } else {
            Some(x.max(0.0).sqrt())
        }
    };
    match word {
        PathWord::Lsl => {
            let p = sqrt_clamped(2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sa - sb))?;
            let tmp = (cb - ca).atan2(d + sa - sb);
            Some([arc_extent(tmp - alpha), p, arc_extent(beta - tmp)])
        }
        PathWord::Rsr => {
            let p = sqrt_clamped(2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sb - sa))?;
            let tmp = (ca - cb).atan2(d - sa + sb);
            Some([arc_extent(alpha - tmp), p, arc_extent(tmp - beta)])
        }
        PathWord::Lsr => {
            let p = sqrt_clamped(-2.0 + d * d + 2.0 * c_ab + 2.0 * d * (sa + sb))?;
            let tmp = (-ca - cb).atan2(d + sa + sb) - (-2.0f64).atan2(p);
            Some([arc_extent(tmp - alpha), p, arc_extent(tmp - beta)])
        }
        PathWord::Rsl => {
            let p = sqrt_clamped(-2.0 + d * d + 2.0 * c_ab - 2.0 * d * (sa + sb))?;
            let tmp = (ca + cb).atan2(d - sa - sb) - 2.0f64.atan2(p);
            Some([arc_extent(alpha - tmp), p, arc_extent(beta - tmp)])
        }
        PathWord::Rlr => {
            let c = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sa - sb)) / 8.0;
            if c.abs() > 1.0 {
                return None;
            }
            let phi = (ca - cb).atan2(d - sa + sb);
            let p = mod2pi(TAU - c.acos());
            let t = arc_extent(alpha - phi + mod2pi(p / 2.0));
            Some([t, p, arc_extent(alpha - beta - t + p)])
        }
        PathWord::Lrl => {
            let c = (6.0 - d * d + 2.0 * c_ab + 2.0 * d * (sb - sa)) / 8.0;
            if c.abs() > 1.0 {
                return None;
            }
            let phi = (ca - cb).atan2(d + sa - sb);
            let p = mod2pi(TAU - c.acos());
            let t = arc_extent(-alpha - phi + p / 2.0);
            Some([t, p, arc_extent(beta - alpha - t + p)])
        }
        _ => None,
    }
}

/// Whether a candidate is admissible. CCC words need a middle arc longer
/// than a half turn.
fn admissible(word: PathWord, params: &[f64; 3]) -> bool {
    !matches!(word, PathWord::Lrl | PathWord::Rlr) || params[1] > PI
}

/// Every admissible two-point word with its normalized parameters.
pub(crate) fn candidates(a: &Configuration, b: &Configuration, rho: f64) -> Vec<(PathWord, [f64; 3])> {
    let n = Normalized::new(a, b, rho);
    PathWord::TWO_POINT
        .iter()
        .filter_map(|&w| word_params(w, &n).map(|p| (w, p)))
        .filter(|(w, p)| admissible(*w, p))
        .collect()
}

/// Builds the path for one two-point word, if it exists.
pub fn dubins_word(a: Configuration, b: Configuration, rho: f64, word: PathWord) -> Option<DubinsPath> {
    let kinds = word.kinds()?;
    let params = word_params(word, &Normalized::new(&a, &b, rho))?;
    if !admissible(word, &params) {
        return None;
    }
    Some(build_word(a, b, rho, word, kinds, params))
}

fn build_word(
    a: Configuration,
    b: Configuration,
    rho: f64,
    word: PathWord,
    kinds: [SegmentKind; 3],
    params: [f64; 3],
) -> DubinsPath {
    let segments = kinds
        .iter()
        .zip(params)
        .map(|(&kind, p)| Segment {
            kind,
            extent: if kind == SegmentKind::Straight { p * rho } else { p },
        })
        .collect();
    DubinsPath::from_segments(a, b, segments, rho, Some(word))
}

/// Shortest path from `a` to `b` with both headings fixed.
///
/// Ties (within rounding) prefer the word with fewer nonzero segments, then
/// the lexicographically smallest word.
pub fn dubins_shortest(a: Configuration, b: Configuration, rho: f64) -> DubinsPath {
    let cands = candidates(&a, &b, rho);
    let best = cands
        .iter()
        .map(|(_, p)| p[0] + p[1] + p[2])
        .fold(f64::INFINITY, f64::min);
    let tie = 1e-12 * (best + 1.0);
    let (word, params) = cands
        .iter()
        .filter(|(_, p)| p[0] + p[1] + p[2] <= best + tie)
        .min_by_key(|(w, p)| (p.iter().filter(|&&x| x > ANGLE_EPS).count(), *w))
        .copied()
        // LSL always has a solution
        .expect("at least one Dubins word is feasible");
    build_word(a, b, rho, word, word.kinds().unwrap(), params)
}

/// Length of the shortest path from `a` to `b`, without building it.
pub fn dubins_length(a: Configuration, b: Configuration, rho: f64) -> f64 {
    rho * min_normalized_length(&Normalized::new(&a, &b, rho))
}

fn min_normalized_length(n: &Normalized) -> f64 {
    PathWord::TWO_POINT
        .iter()
        .filter_map(|&w| {
            word_params(w, n)
                .filter(|p| admissible(w, p))
                .map(|p| p[0] + p[1] + p[2])
        })
        .fold(f64::INFINITY, f64::min)
}

/// Shortest-path lengths for many heading pairs between two fixed positions.
///
/// Returns a row-major `start_headings.len() × end_headings.len()` table.
/// Used by the heading-grid bounds, where the same pair of positions is
/// evaluated for thousands of heading combinations.
pub fn dubins_length_table(from: Point, to: Point, start_headings: &[f64], end_headings: &[f64], rho: f64) -> Vec<f64> {
    let dx = to.x - from.x;
    let dy = to.y - from.y;
    let d = dx.hypot(dy) / rho;
    let theta = if d > 0.0 { mod2pi(dy.atan2(dx)) } else { 0.0 };
    let prep = |h: f64| {
        let a = mod2pi(h - theta);
        let (s, c) = a.sin_cos();
        (a, s, c)
    };
    let starts: Vec<_> = start_headings.iter().map(|&h| prep(h)).collect();
    let ends: Vec<_> = end_headings.iter().map(|&h| prep(h)).collect();
    let mut out = Vec::with_capacity(starts.len() * ends.len());
    for &(alpha, sa, ca) in &starts {
        for &(beta, sb, cb) in &ends {
            let n = Normalized {
                alpha,
                beta,
                sa,
                ca,
                sb,
                cb,
                d,
            };
            out.push(rho * min_normalized_length(&n));
        }
    }
    out
}

/// Arc then straight segment of a one-sided path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSided {
    pub turn: Turn,
    /// Arc extent in radians.
    pub arc: f64,
    pub straight: f64,
    /// Heading along the straight segment.
    pub line_heading: f64,
}

impl OneSided {
    pub fn length(&self, rho: f64) -> f64 {
        self.straight + rho * self.arc
    }
}

/// Turn on the `turn` circle of `a`, then go straight to `target`.
///
/// Returns `None` when `target` lies strictly inside that circle.
pub fn cs_with_turn(a: Configuration, target: Point, rho: f64, turn: Turn) -> Option<OneSided> {
    let c = match turn {
        Turn::Left => a.left_center(rho),
        Turn::Right => a.right_center(rho),
    };
    let (vx, vy) = (target.x - c.x, target.y - c.y);
    let dist = vx.hypot(vy);
    if dist < rho * (1.0 - 1e-12) {
        return None;
    }
    let straight = (dist * dist - rho * rho).max(0.0).sqrt();
    let gamma = vy.atan2(vx);
    let offset = (rho / dist).min(1.0).asin();
    let (line_heading, arc) = match turn {
        Turn::Left => {
            let psi = gamma + offset;
            (psi, arc_extent(psi - a.heading))
        }
        Turn::Right => {
            let psi = gamma - offset;
            (psi, arc_extent(a.heading - psi))
        }
    };
    Some(OneSided {
        turn,
        arc,
        straight,
        line_heading: mod2pi(line_heading),
    })
}

/// Go straight from `source`, then turn on the `turn` circle of `b` to
/// arrive at `b`.
///
/// Returns `None` when `source` lies strictly inside that circle.
pub fn sc_with_turn(source: Point, b: Configuration, rho: f64, turn: Turn) -> Option<OneSided> {
    let c = match turn {
        Turn::Left => b.left_center(rho),
        Turn::Right => b.right_center(rho),
    };
    let (vx, vy) = (source.x - c.x, source.y - c.y);
    let dist = vx.hypot(vy);
    if dist < rho * (1.0 - 1e-12) {
        return None;
    }
    let straight = (dist * dist - rho * rho).max(0.0).sqrt();
    let gamma = vy.atan2(vx);
    let offset = (rho / dist).min(1.0).asin();
    let (line_heading, arc) = match turn {
        Turn::Left => {
            let psi = gamma + PI - offset;
            (psi, arc_extent(b.heading - psi))
        }
        Turn::Right => {
            let psi = gamma + PI + offset;
            (psi, arc_extent(psi - b.heading))
        }
    };
    Some(OneSided {
        turn,
        arc,
        straight,
        line_heading: mod2pi(line_heading),
    })
}

fn check_separation(a: Point, b: Point, rho: f64) -> Result<()> {
    let distance = a.distance(b);
    if distance < 2.0 * rho * (1.0 - 1e-12) {
        return Err(CspError::SeparationViolation {
            first: 0,
            second: 1,
            distance,
            required: 2.0 * rho,
        });
    }
    Ok(())
}

/// Picks the shorter of the two turn directions; ties prefer a pure
/// straight segment, then a left turn.
fn pick_one_sided(l: Option<OneSided>, r: Option<OneSided>, rho: f64) -> OneSided {
    match (l, r) {
        (Some(l), Some(r)) => {
            let (ll, lr) = (l.length(rho), r.length(rho));
            let tie = 1e-12 * (ll.max(lr) + rho);
            if (ll - lr).abs() <= tie {
                if r.arc <= ANGLE_EPS && l.arc > ANGLE_EPS {
                    r
                } else {
                    l
                }
            } else if ll < lr {
                l
            } else {
                r
            }
        }
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (None, None) => unreachable!("a point at least 2ρ away lies outside both turning circles"),
    }
}

/// Shortest path from `a` to the point `target` with the final heading free.
///
/// Requires `|target - a| ≥ 2ρ`, where the optimum is an arc followed by a
/// straight segment.
pub fn shortest_cs(a: Configuration, target: Point, rho: f64) -> Result<DubinsPath> {
    check_separation(a.position(), target, rho)?;
    let best = pick_one_sided(
        cs_with_turn(a, target, rho, Turn::Left),
        cs_with_turn(a, target, rho, Turn::Right),
        rho,
    );
    let word = match (best.arc > ANGLE_EPS, best.turn) {
        (false, _) => PathWord::S,
        (true, Turn::Left) => PathWord::Ls,
        (true, Turn::Right) => PathWord::Rs,
    };
    let end = Configuration::at(target, best.line_heading);
    Ok(DubinsPath::from_segments(
        a,
        end,
        vec![Segment::arc(best.turn, best.arc), Segment::straight(best.straight)],
        rho,
        Some(word),
    ))
}

/// Shortest path from the point `source` to `b` with the initial heading
/// free: a straight segment followed by an arc.
pub fn shortest_sc(source: Point, b: Configuration, rho: f64) -> Result<DubinsPath> {
    check_separation(source, b.position(), rho)?;
    let best = pick_one_sided(
        sc_with_turn(source, b, rho, Turn::Left),
        sc_with_turn(source, b, rho, Turn::Right),
        rho,
    );
    let word = match (best.arc > ANGLE_EPS, best.turn) {
        (false, _) => PathWord::S,
        (true, Turn::Left) => PathWord::Sl,
        (true, Turn::Right) => PathWord::Sr,
    };
    let start = Configuration::at(source, best.line_heading);
    Ok(DubinsPath::from_segments(
        start,
        b,
        vec![Segment::straight(best.straight), Segment::arc(best.turn, best.arc)],
        rho,
        Some(word),
    ))
}

/// Points along `path` spaced at most `step` apart, including both ends.
pub fn sample_path(path: &DubinsPath, step: f64) -> Result<Vec<Point>> {
    if !(step > 0.0) {
        return Err(CspError::InvalidParameter(format!("sampling step must be positive, got {step}")));
    }
    let pieces = (path.length / step).ceil().max(1.0) as usize;
    Ok((0..=pieces)
        .map(|k| path.config_at(path.length * k as f64 / pieces as f64).position())
        .collect())
}

/// Joins consecutive paths into one.
///
/// Each path must start where the previous one ends, within
/// [`POSITION_TOL`]`·ρ` in position and [`HEADING_TOL`] in heading.
pub fn concatenate(paths: &[DubinsPath]) -> Result<DubinsPath> {
    let first = paths
        .first()
        .ok_or_else(|| CspError::InvalidParameter("cannot concatenate an empty list of paths".into()))?;
    if paths.len() == 1 {
        return Ok(first.clone());
    }
    let rho = first.rho;
    for (i, pair) in paths.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let position_gap = prev.end.position().distance(next.start.position());
        let heading_gap = angle_distance(prev.end.heading, next.start.heading);
        if position_gap > POSITION_TOL * rho || heading_gap > HEADING_TOL || next.rho != rho {
            return Err(CspError::Discontinuity {
                index: i + 1,
                position_gap,
                heading_gap,
            });
        }
    }
    let segments = paths.iter().flat_map(|p| p.segments.iter().copied()).collect();
    Ok(DubinsPath {
        start: first.start,
        end: paths[paths.len() - 1].end,
        segments,
        rho,
        length: paths.iter().map(|p| p.length).sum(),
        word: None,
    })
}
