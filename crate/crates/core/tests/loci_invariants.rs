//! Sweeps and loci: conserved quantities for arbitrary axis ratios, and the
//! geometry of the cosine curves.

use std::f64::consts::TAU;

use plectrum::families::{FamilyKind, FamilySpec};
use plectrum::invariants::{
    cosine_extremes, cosine_product_target, cosine_sum_target, sweep, sweep_all, sweep_quantity, ExtremeKind, Quantity,
};
use plectrum::loci::{
    cubic_residual, curve_hausdorff, locus_hausdorff, plane_project, sample_locus, triple_at, CosineTriple, LocusSpace,
    PlaneBasis,
};
use proptest::prelude::*;

fn bbox_diagonal(points: impl Iterator<Item = (f64, f64)>) -> f64 {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    (x1 - x0).hypot(y1 - y0)
}

#[test]
fn plectrum_shrinks_toward_the_circle() {
    let mut previous = f64::INFINITY;
    for a in [3.0, 2.0, 1.5, 1.1, 1.01] {
        let spec = FamilySpec::triangles(FamilyKind::Incircle, a, 1.0).unwrap();
        let samples = sample_locus(&spec, 720, LocusSpace::Cosine).unwrap();
        let d = bbox_diagonal(samples.iter().map(|s| s.uv));
        assert!(d < previous, "a/b={a}: {d} !< {previous}");
        previous = d;
    }
    assert!(previous < 0.02);
}

#[test]
fn triples_respect_the_closed_form_box() {
    for (kind, extreme) in [
        (FamilyKind::Incircle, ExtremeKind::IncircleFamily),
        (FamilyKind::Confocal, ExtremeKind::IncircleFamily),
        (FamilyKind::Circumcircle, ExtremeKind::CircumcircleFamily),
        (FamilyKind::Excentral, ExtremeKind::CircumcircleFamily),
    ] {
        for a in [1.1, 2.0, 3.0] {
            let (lo, hi) = cosine_extremes(a, 1.0, extreme);
            let spec = FamilySpec::triangles(kind, a, 1.0).unwrap();
            for s in sample_locus(&spec, 720, LocusSpace::Cosine).unwrap() {
                for c in s.triple.to_array() {
                    assert!(
                        c >= lo - 1e-12 && c <= hi + 1e-12,
                        "{kind} a={a}: {c} outside [{lo}, {hi}]"
                    );
                }
            }
        }
    }
}

#[test]
fn log_cosine_locus_is_planar() {
    let spec = FamilySpec::triangles(FamilyKind::Circumcircle, 2.0, 1.0).unwrap();
    let target = (1.0f64 / 9.0).ln();
    for s in sample_locus(&spec, 720, LocusSpace::LogCosine).unwrap() {
        assert!((s.coords.iter().sum::<f64>() - target).abs() < 1e-10);
    }
}

#[test]
fn sum_constraint_before_projection() {
    for kind in [FamilyKind::Incircle, FamilyKind::Confocal] {
        let spec = FamilySpec::triangles(kind, 2.0, 1.0).unwrap();
        for s in sample_locus(&spec, 360, LocusSpace::Cosine).unwrap() {
            let [c1, c2, c3] = s.triple.to_array();
            assert!((c3 - (13.0 / 9.0 - c1 - c2)).abs() < 1e-10);
        }
    }
}

#[test]
fn hausdorff_sees_a_fold_in_the_parametrization() {
    // The excentral curve visits its isosceles point at both phi = 0 and
    // phi = π; the nearest sample can belong to the wrong branch.
    let c = FamilySpec::triangles(FamilyKind::Circumcircle, 3.0, 1.0).unwrap();
    let e = FamilySpec::triangles(FamilyKind::Excentral, 3.0, 1.0).unwrap();
    assert!(locus_hausdorff(&c, &e, 512).unwrap() < 1e-9);
}

#[test]
fn hausdorff_separates_different_ratios() {
    let a = FamilySpec::triangles(FamilyKind::Incircle, 2.0, 1.0).unwrap();
    let b = FamilySpec::triangles(FamilyKind::Confocal, 2.1, 1.0).unwrap();
    assert!(locus_hausdorff(&a, &b, 512).unwrap() > 1e-3);
}

#[test]
fn hausdorff_ignores_parametrization_speed() {
    let spec = FamilySpec::triangles(FamilyKind::Incircle, 1.5, 1.0).unwrap();
    let warped = |t: f64| triple_at(&spec, t + 0.3 * t.sin());
    let d = curve_hausdorff(|t| triple_at(&spec, t), TAU, warped, TAU, 512).unwrap();
    assert!(d < 1e-9);
}

#[test]
fn billiard_perimeter_and_sum_are_conserved() {
    for (n, tau) in [(3, 1), (5, 1), (5, 2), (6, 1)] {
        let spec = FamilySpec::billiard_in(2.0, 1.0, n, tau).unwrap();
        let reports = sweep_all(&spec, 400, 1e-9).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert!(r.passed, "n={n} tau={tau} {:?}", r);
        }
    }
}

#[test]
fn four_periodic_targets_zero() {
    let spec = FamilySpec::billiard_in(2.0, 1.0, 4, 1).unwrap();
    let r = sweep(&spec, 1000, 1e-10).unwrap();
    assert_eq!(r.closed_form_target, Some(0.0));
    assert!(r.passed && r.mean.abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sum_families_hit_their_target(a in 0.25f64..6.0) {
        for kind in [FamilyKind::Incircle, FamilyKind::Confocal] {
            let r = sweep(&FamilySpec::triangles(kind, a, 1.0).unwrap(), 200, 1e-10).unwrap();
            prop_assert!(r.passed);
            prop_assert!((r.mean - cosine_sum_target(a, 1.0)).abs() < 1e-10);
        }
    }

    #[test]
    fn product_families_hit_their_target(a in 0.25f64..6.0) {
        for kind in [FamilyKind::Circumcircle, FamilyKind::Excentral] {
            let r = sweep(&FamilySpec::triangles(kind, a, 1.0).unwrap(), 200, 1e-10).unwrap();
            prop_assert!(r.passed);
            prop_assert!((r.mean - cosine_product_target(a, 1.0)).abs() < 1e-10);
        }
    }

    #[test]
    fn targets_are_symmetric_and_scale_free(a in 0.1f64..10.0, b in 0.1f64..10.0, s in 0.1f64..10.0) {
        prop_assert!((cosine_sum_target(a, b) - cosine_sum_target(b, a)).abs() < 1e-15);
        prop_assert!((cosine_sum_target(a, b) - cosine_sum_target(s * a, s * b)).abs() < 1e-14);
        prop_assert!((cosine_product_target(a, b) - cosine_product_target(s * b, s * a)).abs() < 1e-14);
        prop_assert!(cosine_sum_target(a, b) > 1.0 && cosine_sum_target(a, b) <= 1.5);
        prop_assert!(cosine_product_target(a, b) > 0.0 && cosine_product_target(a, b) <= 0.125);
    }

    #[test]
    fn cubic_holds_for_any_ratio(a in 0.25f64..6.0, t in 0.0f64..TAU) {
        let spec = FamilySpec::triangles(FamilyKind::Confocal, a, 1.0).unwrap();
        let triple = CosineTriple::of_triangle(&spec.member(t).unwrap()).unwrap();
        let (u, v) = plane_project(&triple);
        prop_assert!(cubic_residual(u, v, cosine_sum_target(a, 1.0)).abs() < 1e-8);
    }

    #[test]
    fn projection_is_an_isometry_within_a_plane(
        p in prop::array::uniform3(-1.0f64..1.0),
        d in prop::array::uniform2(-1.0f64..1.0),
    ) {
        // q = p + x u + y v stays in p's plane of constant coordinate sum
        let basis = PlaneBasis::STANDARD;
        let q = [
            p[0] + d[0] * basis.u_hat[0] + d[1] * basis.v_hat[0],
            p[1] + d[0] * basis.u_hat[1] + d[1] * basis.v_hat[1],
            p[2] + d[0] * basis.u_hat[2] + d[1] * basis.v_hat[2],
        ];
        let (pu, pv) = basis.project(p);
        let (qu, qv) = basis.project(q);
        let planar = (qu - pu).hypot(qv - pv);
        let spatial = ((q[0] - p[0]).powi(2) + (q[1] - p[1]).powi(2) + (q[2] - p[2]).powi(2)).sqrt();
        prop_assert!((planar - spatial).abs() < 1e-12);
    }

    #[test]
    fn orthic_radii_are_invariant(a in 0.3f64..5.0) {
        let spec = FamilySpec::triangles(FamilyKind::Circumcircle, a, 1.0).unwrap();
        for q in [Quantity::OrthicInradius, Quantity::OrthicCircumradius] {
            prop_assert!(sweep_quantity(&spec, q, 120, 1e-9).unwrap().passed);
        }
    }
}
