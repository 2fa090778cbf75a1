mod common;

use common::{expected_sphere, q, sphere_support};
use supportimpl::surfimpl::tables::{run_row, select_rows};
use supportimpl::surfimpl::{
    estimate_cost, general_assumptions_check, harmonic_surface, prepare, revolution_surface, sendra_degrees,
    surface_implicitize_small, Assumptions, SendraOptions, SurfaceError,
};
use supportimpl::trigsupport::{SphericalSupport, TrigPoly};

#[test]
fn spheres_from_degree_one_harmonics() {
    for (a00, a10, a11, b11) in [(q(1, 1), q(0, 1), q(0, 1), q(0, 1)), (q(5, 2), q(-1, 1), q(2, 3), q(-1, 4))] {
        let s = harmonic_surface(&sphere_support(a00.clone(), a10.clone(), a11.clone(), b11.clone())).unwrap();
        assert_eq!(surface_implicitize_small(&s).unwrap(), expected_sphere(&a00, &a10, &a11, &b11));
    }
}

#[test]
fn sphere_degree_report() {
    let s = harmonic_surface(&SphericalSupport::constant(q(1, 1))).unwrap();
    let r = sendra_degrees(&s).unwrap();
    assert_eq!(r.map_degree, 2);
    assert_eq!(r.table_ratios(), [q(2, 1), q(2, 1), q(2, 1)]);
    assert_eq!(r.raw.s, r.raw.t);
}

#[test]
fn slow_inputs_are_refused_with_cost() {
    let h = SphericalSupport::parse("Y 4 3 a = 1\nY 4 3 b = 1").unwrap();
    let s = harmonic_surface(&h).unwrap();
    let cost = estimate_cost(&s);
    assert!(cost.needs_slow_tier && cost.score > cost.limit);
    match sendra_degrees(&s) {
        Err(SurfaceError::TooExpensive(msg)) => assert!(msg.contains(&cost.score.to_string())),
        other => panic!("expected refusal, got {other:?}"),
    }
}

#[test]
fn slow_rows_need_the_flag() {
    let slow: Vec<String> = select_rows(&[], true).into_iter().map(|r| r.id).collect();
    let default: Vec<String> = select_rows(&[], false).into_iter().map(|r| r.id).collect();
    assert_eq!((slow.len(), default.len()), (24, 17));
    for id in ["T1.4", "T1.9", "T2.11", "T2.15"] {
        assert!(slow.contains(&id.to_string()) && !default.contains(&id.to_string()));
    }
}

#[test]
fn cheapest_rows_match() {
    for id in ["T1.1", "T2.1", "T2.2"] {
        let row = &select_rows(&[id.to_string()], false)[0];
        let out = run_row(row, &SendraOptions::default());
        assert!(out.all_match(), "{out:?}");
    }
}

#[test]
fn revolution_needs_reordering() {
    let s = revolution_surface(&TrigPoly::cos_term(2, q(1, 1))).unwrap();
    let p = prepare(&s).unwrap();
    assert_eq!(p.permutation, [1, 0, 2]);
    assert_eq!(general_assumptions_check(&p.param), Assumptions::Ok);
}

#[test]
fn degenerate_revolution() {
    let p = TrigPoly::new(q(0, 1), [(1, q(1, 1))], []);
    assert_eq!(revolution_surface(&p), Err(SurfaceError::DegenerateRevolution));
}
