//! Test-only oracles and instance helpers. The brute-force Dubins sweeps are
//! independent of the library; the three-point grid minimum reuses only the
//! one-sided primitives, which are checked against their own sweep.
#![allow(dead_code)]

use csp_core::{Configuration, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn wrap(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if TAU - r < 1e-9 {
        0.0
    } else {
        r
    }
}

/// Random configuration pair with positions at least `2ρ` apart.
pub fn random_pair(rng: &mut ChaCha8Rng, rho: f64) -> (Configuration, Configuration) {
    loop {
        let a = Configuration::new(
            rng.random_range(-10.0 * rho..10.0 * rho),
            rng.random_range(-10.0 * rho..10.0 * rho),
            rng.random_range(0.0..TAU),
        );
        let b = Configuration::new(
            rng.random_range(-10.0 * rho..10.0 * rho),
            rng.random_range(-10.0 * rho..10.0 * rho),
            rng.random_range(0.0..TAU),
        );
        if a.position().distance(b.position()) >= 2.0 * rho {
            return (a, b);
        }
    }
}

pub fn random_point_at_least(rng: &mut ChaCha8Rng, from: Point, min: f64, span: f64) -> Point {
    loop {
        let p = Point::new(
            from.x + rng.random_range(-span..span),
            from.y + rng.random_range(-span..span),
        );
        if p.distance(from) >= min {
            return p;
        }
    }
}

fn center(q: &Configuration, left: bool, rho: f64) -> (f64, f64) {
    let (s, c) = q.heading.sin_cos();
    if left {
        (q.x - rho * s, q.y + rho * c)
    } else {
        (q.x + rho * s, q.y - rho * c)
    }
}

/// Root refinement of a sign change of `f` on `[lo, hi]`.
fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm <= 0.0) == (flo <= 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimization of `f` on `[lo, hi]`.
fn golden_min(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if f(a) < f(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    0.5 * (lo + hi)
}

/// Roots of `f` over a periodic parameter sampled at `samples` points:
/// sign changes plus near-touching local minima of `|f|`.
fn sweep_roots(f: &dyn Fn(f64) -> f64, samples: usize, touch_tol: f64) -> Vec<f64> {
    let step = TAU / samples as f64;
    let vals: Vec<f64> = (0..=samples).map(|k| f(k as f64 * step)).collect();
    let mut roots = Vec::new();
    for k in 0..samples {
        let (a, b) = (vals[k], vals[k + 1]);
        let (x0, x1) = (k as f64 * step, (k + 1) as f64 * step);
        if a == 0.0 {
            roots.push(x0);
        } else if (a < 0.0) != (b < 0.0) && b != 0.0 {
            roots.push(bisect(f, x0, x1));
        }
        let prev = vals[if k == 0 { samples - 1 } else { k - 1 }];
        if k > 0 && a.abs() <= prev.abs() && a.abs() <= b.abs() && a.signum() == b.signum() && a.signum() == prev.signum() {
            let x = golden_min(&|t| f(t).abs(), x0 - step, x1);
            if f(x).abs() < touch_tol {
                roots.push(x);
            }
        }
    }
    roots
}

/// Brute-force shortest Dubins length by sweeping each word family over a
/// geometric parameter and solving the closure condition numerically.
///
/// CSC families are parameterized by the heading of the straight segment:
/// tangent points on both turning circles follow from that heading and the
/// closure residual is the cross product of the segment with its direction.
/// CCC families are parameterized by the first arc extent: the middle
/// circle must then touch the final circle.
pub fn brute_force_dubins(a: &Configuration, b: &Configuration, rho: f64, samples_per_family: usize) -> f64 {
    let mut best = f64::INFINITY;
    for (l1, l2) in [(true, true), (false, false), (true, false), (false, true)] {
        let c1 = center(a, l1, rho);
        let c2 = center(b, l2, rho);
        // tangent point on a circle where the direction of travel is phi
        let tangent = |c: (f64, f64), left: bool, phi: f64| {
            let (s, co) = phi.sin_cos();
            if left {
                (c.0 + rho * s, c.1 - rho * co)
            } else {
                (c.0 - rho * s, c.1 + rho * co)
            }
        };
        let seg = |phi: f64| {
            let d = tangent(c1, l1, phi);
            let e = tangent(c2, l2, phi);
            (e.0 - d.0, e.1 - d.1)
        };
        let residual = |phi: f64| {
            let (vx, vy) = seg(phi);
            phi.cos() * vy - phi.sin() * vx
        };
        if (c1.0 - c2.0).hypot(c1.1 - c2.1) < 1e-12 * rho && l1 == l2 {
            // same circle: a single arc
            let ext = if l1 { wrap(b.heading - a.heading) } else { wrap(a.heading - b.heading) };
            best = best.min(rho * ext);
            continue;
        }
        for phi in sweep_roots(&residual, samples_per_family, 1e-9 * rho) {
            let (vx, vy) = seg(phi);
            let along = phi.cos() * vx + phi.sin() * vy;
            if along < -1e-9 * rho || residual(phi).abs() > 1e-7 * rho {
                continue;
            }
            let e1 = if l1 { wrap(phi - a.heading) } else { wrap(a.heading - phi) };
            let e2 = if l2 { wrap(b.heading - phi) } else { wrap(phi - b.heading) };
            best = best.min(rho * (e1 + e2) + along.max(0.0));
        }
    }
    for outer_left in [true, false] {
        let c1 = center(a, outer_left, rho);
        let c2 = center(b, outer_left, rho);
        let sgn = if outer_left { 1.0 } else { -1.0 };
        // middle circle center after a first arc of extent t
        let mid = |t: f64| {
            let h = a.heading + sgn * t;
            let (s, c) = h.sin_cos();
            if outer_left {
                (c1.0 + 2.0 * rho * s, c1.1 - 2.0 * rho * c)
            } else {
                (c1.0 - 2.0 * rho * s, c1.1 + 2.0 * rho * c)
            }
        };
        let residual = |t: f64| {
            let m = mid(t);
            (m.0 - c2.0).hypot(m.1 - c2.1) - 2.0 * rho
        };
        for t in sweep_roots(&residual, samples_per_family, 1e-9 * rho) {
            if residual(t).abs() > 1e-7 * rho {
                continue;
            }
            let m = mid(t);
            let (dx, dy) = (c2.0 - m.0, c2.1 - m.1);
            let h1 = a.heading + sgn * t;
            let (middle, last) = if outer_left {
                let h2 = (-dx).atan2(dy);
                (wrap(h1 - h2), wrap(b.heading - h2))
            } else {
                let h2 = dx.atan2(-dy);
                (wrap(h2 - h1), wrap(h2 - b.heading))
            };
            best = best.min(rho * (wrap(t) + middle + last));
        }
    }
    best
}

/// Shortest arc-then-straight length to `target` with a given turn side,
/// computed by sweeping the arc extent and locating where the heading ray
/// passes through the target.
pub fn brute_force_cs(a: &Configuration, target: Point, rho: f64, samples: usize) -> f64 {
    let mut best = f64::INFINITY;
    for left in [true, false] {
        let c = center(a, left, rho);
        let sgn = if left { 1.0 } else { -1.0 };
        let state = |t: f64| {
            let h = a.heading + sgn * t;
            let (s, co) = h.sin_cos();
            let pos = if left {
                (c.0 + rho * s, c.1 - rho * co)
            } else {
                (c.0 - rho * s, c.1 + rho * co)
            };
            (pos, h)
        };
        let residual = |t: f64| {
            let ((x, y), h) = state(t);
            h.cos() * (target.y - y) - h.sin() * (target.x - x)
        };
        for t in sweep_roots(&residual, samples, 1e-9 * rho) {
            let ((x, y), h) = state(t);
            let along = h.cos() * (target.x - x) + h.sin() * (target.y - y);
            if along < -1e-9 * rho {
                continue;
            }
            best = best.min(rho * wrap(t) + along.max(0.0));
        }
    }
    best
}

pub fn assert_rel(actual: f64, expected: f64, rel: f64, what: &str) {
    let scale = expected.abs().max(1e-300);
    assert!(
        ((actual - expected) / scale).abs() <= rel,
        "{what}: {actual} vs {expected} (rel err {})",
        ((actual - expected) / scale).abs()
    );
}

pub const HALF_PI: f64 = PI / 2.0;

/// Random triple with both adjacent gaps at least `2ρ`.
pub fn random_triple(rng: &mut ChaCha8Rng, rho: f64) -> (Point, Point, Point) {
    let p2 = Point::new(rng.random_range(-500.0..500.0), rng.random_range(-500.0..500.0));
    let p1 = random_point_at_least(rng, p2, 2.0 * rho, 8.0 * rho);
    let p3 = random_point_at_least(rng, p2, 2.0 * rho, 8.0 * rho);
    (p1, p2, p3)
}

/// Minimum over a uniform grid of headings at `p2` of the shortest
/// free-start path into `(p2, θ)` plus the shortest free-end path out of it.
/// Each leg picks its own turn direction, so mixed left/right corners are
/// included in the minimum.
pub fn three_point_grid_min(p1: Point, p2: Point, p3: Point, rho: f64, samples: usize) -> f64 {
    use csp_core::{cs_with_turn, sc_with_turn, Turn};
    (0..samples)
        .map(|k| {
            let q = Configuration::at(p2, TAU * k as f64 / samples as f64);
            let into = [Turn::Left, Turn::Right]
                .iter()
                .filter_map(|&t| sc_with_turn(p1, q, rho, t))
                .map(|s| s.length(rho))
                .fold(f64::INFINITY, f64::min);
            let out = [Turn::Left, Turn::Right]
                .iter()
                .filter_map(|&t| cs_with_turn(q, p3, rho, t))
                .map(|s| s.length(rho))
                .fold(f64::INFINITY, f64::min);
            into + out
        })
        .fold(f64::INFINITY, f64::min)
}

/// Plain Dubins length between fixed headings, minimum of the brute-force
/// sweep. Slow; only for small grids.
pub fn brute_force_length(a: Point, ha: f64, b: Point, hb: f64, rho: f64, samples: usize) -> f64 {
    brute_force_dubins(&Configuration::at(a, ha), &Configuration::at(b, hb), rho, samples)
}

/// Equally spaced points on a line through `origin` with direction `angle`.
pub fn collinear(n: usize, gap: f64, origin: Point, angle: f64) -> Vec<Point> {
    let (s, c) = angle.sin_cos();
    (0..n)
        .map(|i| Point::new(origin.x + c * gap * i as f64, origin.y + s * gap * i as f64))
        .collect()
}
