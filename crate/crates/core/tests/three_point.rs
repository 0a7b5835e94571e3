mod common;

use common::*;
use csp_core::three_point::{
    canonicalize, classify, iteration_bound, length_profile, search_interval, solve_three_point, ThreePointClass,
    SCAN_STEPS,
};
use csp_core::{PathWord, Point, RigidMotion, Turn};
use proptest::prelude::*;
use std::f64::consts::TAU;

const RHO: f64 = 100.0;
const EPS: f64 = 1e-4;

fn side_of(class: ThreePointClass) -> Turn {
    match class {
        ThreePointClass::Sls => Turn::Left,
        _ => Turn::Right,
    }
}

#[test]
fn solver_within_eps_of_dense_grid() {
    let mut rng = rng(21);
    let samples = 100_000;
    let slack = 2.0 * RHO * TAU / samples as f64;
    for i in 0..100 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let s = solve_three_point(p1, p2, p3, RHO, EPS).unwrap();
        let grid = three_point_grid_min(p1, p2, p3, RHO, samples);
        assert!(s.length() <= (1.0 + EPS) * grid, "case {i}: {} > (1+ε)·{}", s.length(), grid);
        assert!(s.length() >= grid - slack, "case {i}: {} < {} - slack", s.length(), grid);
    }
}

#[test]
fn certificate_and_visits() {
    let mut rng = rng(22);
    for i in 0..500 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let s = solve_three_point(p1, p2, p3, RHO, EPS).unwrap();
        if s.interior {
            assert!(s.certificate_residual <= 1e-3, "case {i}: residual {}", s.certificate_residual);
        }
        assert!(s.path.endpoint_error() < 1e-6 * RHO);
        let hits = s.path.locate_waypoints(&[p1, p2, p3], 1e-6 * RHO).expect("visits all three points");
        assert!(hits.windows(2).all(|w| w[0] <= w[1]));
        // p2 lies strictly inside the arc
        if s.word != PathWord::S {
            let arc_start = s.path.segments[0].extent;
            let arc_end = s.path.length - s.path.segments.last().unwrap().extent;
            assert!(hits[1] >= arc_start - 1e-6 * RHO && hits[1] <= arc_end + 1e-6 * RHO);
        }
        let d12 = p1.distance(p2);
        let d23 = p2.distance(p3);
        assert!(s.length() >= d12.max(d23));
        assert!(s.length() >= (d12 + d23) * (1.0 - 1e-12));
    }
}

#[test]
fn classification_matches_turn_direction() {
    let mut rng = rng(23);
    for _ in 0..300 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let frame = canonicalize(p1, p2, p3, RHO).unwrap();
        let s = solve_three_point(p1, p2, p3, RHO, EPS).unwrap();
        match classify(&frame) {
            ThreePointClass::Srs => assert_eq!(s.word, PathWord::Srs),
            ThreePointClass::Sls => assert_eq!(s.word, PathWord::Sls),
            _ => {}
        }
    }
}

#[test]
fn frame_scalars_invariant_under_rotation() {
    let mut rng = rng(24);
    let m = RigidMotion::new(37f64.to_radians(), 0.0, 0.0);
    for _ in 0..200 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let a = canonicalize(p1, p2, p3, RHO).unwrap();
        let b = canonicalize(m.apply(p1), m.apply(p2), m.apply(p3), RHO).unwrap();
        assert!((a.d12 - b.d12).abs() < 1e-9 * RHO);
        assert!((a.d23 - b.d23).abs() < 1e-9 * RHO);
        assert!((a.p1.y.abs() - b.p1.y.abs()).abs() < 1e-9 * RHO);
        assert_eq!(a.y1_sign, b.y1_sign);
        // p2 maps to the origin and p3 onto the positive x axis
        assert!(a.to_local.apply(p2).distance(Point::new(0.0, 0.0)) < 1e-9 * RHO);
        let q3 = a.to_local.apply(p3);
        assert!(q3.y.abs() < 1e-9 * RHO && q3.x > 0.0);
    }
}

#[test]
fn derivative_identity_by_finite_differences() {
    let mut rng = rng(25);
    let h = 1e-6;
    let mut checked = 0;
    while checked < 50 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let frame = canonicalize(p1, p2, p3, RHO).unwrap();
        let class = classify(&frame);
        if class == ThreePointClass::Straight {
            continue;
        }
        let side = side_of(class);
        let sign = if side == Turn::Right { 1.0 } else { -1.0 };
        let upper = search_interval(&frame, side);
        for k in 0..20 {
            let theta = sign * upper * (0.02 + 0.96 * k as f64 / 19.0);
            let at = |t: f64| length_profile(&frame, t, side).unwrap();
            let fd = (at(theta + h).total() - at(theta - h).total()) / (2.0 * h);
            let g = at(theta);
            let identity = sign * RHO * (g.turn12.cos() - g.turn23.cos());
            assert!((fd - identity).abs() <= 1e-4, "fd {fd} vs {identity}");
            // lengths decompose into straight plus arc
            assert!((g.d1 - (g.l12 + RHO * g.turn12)).abs() <= 1e-9 * g.d1);
            assert!((g.d2 - (g.l23 + RHO * g.turn23)).abs() <= 1e-9 * g.d2);
        }
        checked += 1;
    }
}

#[test]
fn slope_monotone_on_bracket_and_convex_near_optimum() {
    let mut rng = rng(26);
    for _ in 0..100 {
        let (p1, p2, p3) = random_triple(&mut rng, RHO);
        let frame = canonicalize(p1, p2, p3, RHO).unwrap();
        let class = classify(&frame);
        if class == ThreePointClass::Straight {
            continue;
        }
        let side = side_of(class);
        let sign = if side == Turn::Right { 1.0 } else { -1.0 };
        let upper = search_interval(&frame, side);
        let at = |phi: f64| length_profile(&frame, sign * phi, side).unwrap();
        let cell = upper / SCAN_STEPS as f64;
        let Some(k) = (0..SCAN_STEPS).find(|&k| at(k as f64 * cell).slope() <= 0.0 && at((k + 1) as f64 * cell).slope() > 0.0)
        else {
            continue;
        };
        let lo = k as f64 * cell;
        let slopes: Vec<f64> = (0..=1000).map(|j| at(lo + cell * j as f64 / 1000.0).slope()).collect();
        assert!(slopes.windows(2).all(|w| w[1] >= w[0] - 1e-12));
        let step = cell / 4.0;
        for j in 1..4 {
            let phi = lo + step * j as f64;
            let second = at(phi + step).total() - 2.0 * at(phi).total() + at(phi - step).total();
            assert!(second > 0.0);
        }
    }
}

#[test]
fn iteration_count_is_logarithmic() {
    let mut rng = rng(27);
    for eps in [1e-2, 1e-4, 1e-8] {
        for _ in 0..100 {
            let (p1, p2, p3) = random_triple(&mut rng, RHO);
            let frame = canonicalize(p1, p2, p3, RHO).unwrap();
            let class = classify(&frame);
            if class == ThreePointClass::Straight {
                continue;
            }
            let s = solve_three_point(p1, p2, p3, RHO, eps).unwrap();
            if s.interior {
                let bound = iteration_bound(&frame, Turn::Right, eps).max(iteration_bound(&frame, Turn::Left, eps));
                assert!(s.iterations <= bound, "{} > {bound}", s.iterations);
            }
        }
    }
}

fn point() -> impl Strategy<Value = Point> {
    (-800.0..800.0f64, -800.0..800.0f64).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mirror_flips_turn_and_keeps_length(p1 in point(), p2 in point(), p3 in point()) {
        prop_assume!(p1.distance(p2) >= 2.0 * RHO && p2.distance(p3) >= 2.0 * RHO);
        let frame = canonicalize(p1, p2, p3, RHO).unwrap();
        prop_assume!(frame.y1_sign != 0);
        let flip = |p: Point| Point::new(p.x, -p.y);
        let a = solve_three_point(p1, p2, p3, RHO, EPS).unwrap();
        let b = solve_three_point(flip(p1), flip(p2), flip(p3), RHO, EPS).unwrap();
        prop_assert!((a.length() - b.length()).abs() <= 1e-9 * a.length());
        prop_assert_eq!(b.word, a.word.mirrored());
    }

    #[test]
    fn rigid_motion_keeps_length(p1 in point(), p2 in point(), p3 in point(), angle in 0.0..TAU, tx in -300.0..300.0f64) {
        prop_assume!(p1.distance(p2) >= 2.0 * RHO && p2.distance(p3) >= 2.0 * RHO);
        let m = RigidMotion::new(angle, tx, -tx);
        let a = solve_three_point(p1, p2, p3, RHO, EPS).unwrap();
        let b = solve_three_point(m.apply(p1), m.apply(p2), m.apply(p3), RHO, EPS).unwrap();
        prop_assert!((a.length() - b.length()).abs() <= 1e-9 * a.length());
    }
}
