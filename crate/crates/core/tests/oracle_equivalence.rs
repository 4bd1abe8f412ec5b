//! The ray tracer knows nothing about Jacobi functions or the closed-form
//! families; here it must rebuild their polygons bounce by bounce.

use plectrum::conics::Ellipse;
use plectrum::families::{circumcircle_triangle, incircle_triangle, FamilyKind, FamilySpec};
use plectrum::geometry::Vec2;
use plectrum::oracle::{reflect_step, reflection_residual, tangency_residual, trace_closure, Ray};
use proptest::prelude::*;

fn retrace(spec: &FamilySpec, samples: usize) -> (f64, f64) {
    let table = spec.conic_pair().unwrap().outer;
    let (mut vertex, mut closure) = (0.0_f64, 0.0_f64);
    for (_, poly) in spec.members(samples).unwrap() {
        let start = Ray::through(poly.vertex(0), poly.vertex(1)).unwrap();
        let (traced, err) = trace_closure(&start, &table, poly.len()).unwrap();
        closure = closure.max(err);
        for k in 0..poly.len() {
            vertex = vertex.max((traced.vertex(k) - poly.vertex(k)).norm());
        }
    }
    (vertex, closure)
}

#[test]
fn confocal_triangles_are_retraced() {
    for a in [1.1, 1.5, 2.0, 3.0, 0.5] {
        let (vertex, closure) = retrace(&FamilySpec::triangles(FamilyKind::Confocal, a, 1.0).unwrap(), 64);
        assert!(vertex < 1e-8 && closure < 1e-8, "a={a}: {vertex:e} {closure:e}");
    }
}

#[test]
fn billiard_n_periodics_are_retraced() {
    for (a_c, b_c) in [(0.5, 0.4), (0.5, 0.3), (1.0, 0.05)] {
        for (n, tau) in [(3, 1), (4, 1), (5, 2), (7, 3), (10, 3), (11, 5)] {
            let (vertex, closure) = retrace(&FamilySpec::billiard(a_c, b_c, n, tau).unwrap(), 16);
            assert!(
                vertex < 1e-8 && closure < 1e-8,
                "({a_c},{b_c}) n={n} tau={tau}: {vertex:e} {closure:e}"
            );
        }
    }
}

#[test]
fn circumcircle_family_is_not_a_billiard() {
    let tri = circumcircle_triangle(2.0, 1.0, 0.2).unwrap();
    let table = Ellipse::circle(3.0).unwrap();
    let start = Ray::through(tri.vertex(0), tri.vertex(1)).unwrap();
    let (_, err) = trace_closure(&start, &table, 3).unwrap();
    assert!(err > 1e-2);
}

#[test]
fn incircle_family_reflection_fails_off_the_circle() {
    let tri = incircle_triangle(2.0, 1.0, 0.5).unwrap();
    let table = Ellipse::new(2.0, 1.0).unwrap();
    assert!(reflection_residual(&tri, &table).unwrap() > 1e-2);
}

#[test]
fn chords_of_a_traced_orbit_share_one_caustic() {
    let spec = FamilySpec::billiard_in(2.0, 1.0, 5, 2).unwrap();
    let pair = spec.conic_pair().unwrap();
    let poly = spec.member(0.7).unwrap();
    let mut ray = Ray::through(poly.vertex(0), poly.vertex(1)).unwrap();
    // go round twice, well past closure
    for _ in 0..10 {
        let next = reflect_step(&ray, &pair.outer).unwrap();
        assert!(tangency_residual(ray.origin, next.origin, &pair.caustic).unwrap() < 1e-9);
        ray = next;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reversing_the_outgoing_ray_returns_the_incoming_one(
        t in 0.0f64..std::f64::consts::TAU,
        angle in 0.05f64..3.09,
        a in 0.5f64..4.0,
    ) {
        let table = Ellipse::new(a, 1.0).unwrap();
        let origin = table.point_at(t);
        // aim into the table, away from the tangent
        let tangent = table.tangent(origin);
        let inward = Vec2::new(-tangent.y, tangent.x);
        let dir = tangent * angle.cos() + inward * angle.sin();
        let incoming = Ray::new(origin, dir).unwrap();
        // bounce at Q, travel on to R; fired back from R along the reversed
        // chord, the ray must bounce at Q onto the reversed incoming ray
        let out = reflect_step(&incoming, &table).unwrap();
        let far = reflect_step(&out, &table).unwrap();
        let back = reflect_step(&Ray::new(far.origin, -out.direction()).unwrap(), &table).unwrap();
        prop_assert!((back.origin - out.origin).norm() < 1e-12);
        prop_assert!((back.direction() + incoming.direction()).norm() < 1e-12);
    }

    #[test]
    fn impacts_stay_on_the_table(t in 0.0f64..6.3, angle in 0.05f64..3.09, bounces in 1usize..40) {
        let table = Ellipse::new(2.0, 1.0).unwrap();
        let origin = table.point_at(t);
        let tangent = table.tangent(origin);
        let inward = Vec2::new(-tangent.y, tangent.x);
        let mut ray = Ray::new(origin, tangent * angle.cos() + inward * angle.sin()).unwrap();
        for _ in 0..bounces {
            ray = reflect_step(&ray, &table).unwrap();
            prop_assert!(table.residual(ray.origin).abs() < 1e-11);
        }
    }
}
