//! Product-conserving triples lie on a sphere and a Titeica surface; their
//! logs lie in a plane.

use plectrum::families::{FamilyKind, FamilySpec};
use plectrum::invariants::cosine_product_target;
use plectrum::loci::{locus_hausdorff, sample_locus, LocusSpace};

fn main() -> plectrum::Result<()> {
    for a in [1.5, 2.0, 3.0] {
        let circ = FamilySpec::triangles(FamilyKind::Circumcircle, a, 1.0)?;
        let exc = FamilySpec::triangles(FamilyKind::Excentral, a, 1.0)?;
        let kp = cosine_product_target(a, 1.0);
        let worst = |f: fn(&plectrum::loci::LocusSample) -> f64| -> plectrum::Result<f64> {
            Ok(sample_locus(&circ, 720, LocusSpace::Cosine)?
                .iter()
                .map(f)
                .fold(0.0, f64::max))
        };
        println!(
            "a/b={a}: k'={kp:.10}, radius^2 {:.10}, max |sphere| {:.1e}, |titeica| {:.1e}, |union| {:.1e}, hausdorff {:.1e}",
            1.0 - 2.0 * kp,
            worst(|s| s.residuals.sphere.unwrap().abs())?,
            worst(|s| s.residuals.titeica.unwrap().abs())?,
            worst(|s| s.residuals.union.unwrap().abs())?,
            locus_hausdorff(&circ, &exc, 1024)?
        );
        let logs = sample_locus(&circ, 360, LocusSpace::LogCosine)?;
        let sums: Vec<f64> = logs.iter().map(|s| s.coords.iter().sum()).collect();
        let spread = sums.iter().fold(0.0f64, |m, v| m.max((v - kp.ln()).abs()));
        println!(
            "        log-cosine plane x+y+z = ln k' = {:.12}, max offset {spread:.1e}",
            kp.ln()
        );
    }
    Ok(())
}
