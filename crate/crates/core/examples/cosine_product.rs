//! Circumcircle and excentral triangles conserve the same product of
//! cosines; the circumcircle family's orthic triangles have fixed radii.

use plectrum::families::{orthic_of, FamilyKind, FamilySpec};
use plectrum::geometry::TriangleMetrics;
use plectrum::invariants::{cosine_product_target, sweep_all, DEFAULT_TOL};

fn main() -> plectrum::Result<()> {
    for a in [1.1, 2.0, 3.0] {
        println!("a/b = {a}, expected product {:.16}", cosine_product_target(a, 1.0));
        for kind in [FamilyKind::Circumcircle, FamilyKind::Excentral] {
            let spec = FamilySpec::triangles(kind, a, 1.0)?;
            for r in sweep_all(&spec, 1000, DEFAULT_TOL)? {
                println!(
                    "  {:>12} {:<20} mean {:.16} max dev {:.1e}",
                    kind.to_string(),
                    r.quantity.name(),
                    r.mean,
                    r.max_abs_deviation
                );
            }
        }
    }

    // the product equals r_h / (4 R_h) of the orthic triangle
    let spec = FamilySpec::triangles(FamilyKind::Circumcircle, 2.0, 1.0)?;
    for phi in [0.0, 0.5, 1.9] {
        let tri = spec.member(phi)?;
        let product: f64 = tri.internal_cosines()?.iter().product();
        let m = TriangleMetrics::of(&orthic_of(&tri)?)?;
        println!(
            "phi={phi}: product {product:.15}, r_h/(4 R_h) {:.15}",
            m.inradius / (4.0 * m.circumradius)
        );
    }
    Ok(())
}
