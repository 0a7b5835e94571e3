use csp_core::{default_extent, generate, read_instance, write_instance, CspError, Instance, Point};
use proptest::prelude::*;

#[test]
fn ten_thousand_seeds_are_valid() {
    for seed in 0..10_000u64 {
        let n = 3 + (seed % 28) as usize;
        let rho = 100.0;
        let ext = default_extent(n, rho);
        let inst = generate(n, rho, ext, seed).unwrap();
        assert_eq!(inst.len(), n);
        assert_eq!(inst.seed(), Some(seed));
        for w in inst.points().windows(2) {
            assert!(w[0].distance(w[1]) >= 2.0 * rho, "seed {seed}");
        }
        assert!(inst.points().iter().all(|p| (0.0..=ext).contains(&p.x) && (0.0..=ext).contains(&p.y)));
    }
}

#[test]
fn thousand_round_trips_are_bitwise() {
    for seed in 0..1000u64 {
        let inst = generate(12, 100.0, default_extent(12, 100.0), seed).unwrap();
        let back = read_instance(&write_instance(&inst)).unwrap();
        for (a, b) in inst.points().iter().zip(back.points()) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
        }
        assert_eq!(inst, back);
    }
}

#[test]
fn gap_below_two_rho_is_rejected() {
    let doc = br#"{"rho": 100.0, "points": [[0, 0], [190, 0], [400, 0]], "seed": 3}"#;
    match read_instance(doc) {
        Err(CspError::Validation(msg)) => assert!(msg.contains("points 0 and 1"), "{msg}"),
        other => panic!("expected validation error, got {other:?}"),
    }
}

#[test]
fn too_few_points_is_validation_error() {
    let doc = br#"{"rho": 1, "points": [[0, 0], [5, 0]], "seed": null}"#;
    assert!(matches!(read_instance(doc), Err(CspError::Validation(_))));
}

#[test]
fn missing_field_is_parse_error() {
    let doc = b"{\n  \"points\": [[0, 0], [5, 0], [10, 0]]\n}";
    match read_instance(doc) {
        Err(CspError::Parse { message, .. }) => assert!(message.contains("rho"), "{message}"),
        other => panic!("expected parse error, got {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn arbitrary_coordinates_round_trip(
        xs in prop::collection::vec((-1e12..1e12f64, -1e12..1e12f64), 3..20),
        rho in 1e-6..1e-3f64,
        seed in prop::option::of(any::<u64>()),
    ) {
        let mut pts: Vec<Point> = xs.into_iter().map(Point::from).collect();
        // spread points so adjacent gaps always clear 2ρ
        for (i, p) in pts.iter_mut().enumerate() {
            p.x += i as f64 * 1.0;
        }
        prop_assume!(pts.windows(2).all(|w| w[0].distance(w[1]) >= 2.0 * rho));
        let inst = Instance::with_seed(pts, rho, seed).unwrap();
        let back = read_instance(&write_instance(&inst)).unwrap();
        prop_assert_eq!(inst, back);
    }
}
