mod common;

use common::*;
use supportimpl::curveimpl::{
    implicitize, predicted_total_degree, rational_parametrization, sample_parameters, tracing_index, verify_vanishing,
    Vanishing,
};
use supportimpl::exactalg::{MultiPoly, Rational};
use supportimpl::trigsupport::{classify, ClassKind, TrigPoly};

fn half_x(f: &MultiPoly) -> MultiPoly {
    let x = MultiPoly::var_idx(f.vars(), 0).scale(&q(1, 2));
    f.substitute(0, &x)
}

#[test]
fn rabinowitz_degree_and_vanishing() {
    let r = implicitize(&rabinowitz()).unwrap();
    assert_eq!((r.total_degree, r.tracing_index), (8, 1));
    assert_eq!(r.f.terms().count(), 24);
    assert_eq!(verify_vanishing(&r.f, &rabinowitz(), &sample_parameters()).unwrap(), Vanishing::Ok);
}

#[test]
fn printed_rabinowitz_is_ours_with_x_halved() {
    let ours = implicitize(&rabinowitz()).unwrap().f;
    let printed = xy_poly(RABINOWITZ_PRINTED);
    assert_ne!(printed.normalize(), ours);
    assert_eq!(printed.normalize(), half_x(&ours).normalize());
}

#[test]
fn rotor_matches_printed_up_to_scale() {
    let r = implicitize(&rotor_example()).unwrap();
    assert_eq!(r.total_degree, 6);
    let (factor, canonical) = xy_poly(ROTOR_PRINTED).normalize_with_factor();
    assert_eq!(canonical, r.f);
    assert_eq!(factor, Rational::from(1i64 << 18));
}

#[test]
fn degree_law_on_seeded_family() {
    for (i, p) in suite().iter().enumerate() {
        let r = implicitize(p).unwrap();
        let n = p.degree() as i64;
        let expect = if i % 2 == 1 { n + 1 } else { 2 * n + 2 };
        assert_eq!(r.total_degree, expect, "member {i}: {}", p.to_formula());
        assert_eq!(predicted_total_degree(p).total_degree, expect);
        assert_eq!(verify_vanishing(&r.f, p, &sample_parameters()).unwrap(), Vanishing::Ok, "member {i}");
        if r.tracing_index == 1 {
            let d = rational_parametrization(p).unwrap().degrees();
            assert_eq!(r.deg_y, d.p1.max(d.q), "member {i}");
        }
    }
}

#[test]
fn numerator_degree_bounds() {
    let mut reached = 0;
    for p in suite() {
        let d = rational_parametrization(&p).unwrap().degrees();
        let n = p.degree() as i64;
        assert!(d.p1 <= 2 * n + 2 && d.p2 <= 2 * n + 2 && d.q == 2 * n + 2);
        if p.sin_terms().next().is_none() {
            assert!(d.p2 <= 2 * n + 1, "{}", p.to_formula());
        }
        reached += (d.p2 == 2 * n + 2) as usize;
    }
    assert!(reached > 0);
    let p = TrigPoly::new(q(6, 5), [(3, q(-3, 2))], [(1, q(-6, 1)), (3, q(2, 3))]);
    assert_eq!(rational_parametrization(&p).unwrap().degrees().p2, 8);
}

/// `θ ↦ θ + π` is `t ↦ −1/t` in the half-angle chart.
fn antipodal_agrees(p: &TrigPoly) -> bool {
    let param = rational_parametrization(p).unwrap();
    sample_parameters().iter().filter(|t| !t.is_zero()).all(|t| {
        let opposite = -t.recip().unwrap();
        param.point(t) == param.point(&opposite)
    })
}

#[test]
fn tracing_index_matches_half_turn() {
    for (i, p) in suite().iter().enumerate() {
        let r = tracing_index(p).unwrap();
        assert_eq!(r == 2, antipodal_agrees(p), "member {i}: {}", p.to_formula());
        assert_eq!(r == 2, i % 2 == 1);
    }
}

#[test]
fn constant_width_degrees() {
    for m in 1..=2 {
        let p = constant_width(m);
        assert!(matches!(classify(&p).kind, ClassKind::ConstantWidth { .. }));
        assert_eq!(classify(&p).width, Some(q(2, 1)));
        let r = implicitize(&p).unwrap();
        assert_eq!(r.total_degree, 4 * m as i64 + 4);
    }
}

#[test]
fn rotor_degrees() {
    for (n, m) in [(3, 1), (3, 2), (5, 1)] {
        let p = rotor(n, m);
        let c = classify(&p);
        assert!(c.rotor_orders.contains(&n), "{}", p.to_formula());
        let r = implicitize(&p).unwrap();
        assert_eq!(r.total_degree, 2 * (n * m) as i64 + 4, "rotor ({n}, {m})");
    }
}

#[test]
fn circle_radius_is_constant_term() {
    let p = TrigPoly::new(q(3, 1), [(1, q(1, 2))], [(1, q(-2, 1))]);
    let r = implicitize(&p).unwrap();
    assert_eq!(r.f, xy_poly("x^2 - x + y^2 + 4*y - 19/4").normalize());
}
