//! Projected cosine triples of the sum-conserving families lie on one cubic,
//! and the incircle and confocal families sweep the same curve.

use plectrum::families::{FamilyKind, FamilySpec};
use plectrum::loci::{locus_hausdorff, sample_locus, LocusSpace};

fn main() -> plectrum::Result<()> {
    for a in [3.0, 2.0, 1.5, 1.1] {
        let inc = FamilySpec::triangles(FamilyKind::Incircle, a, 1.0)?;
        let conf = FamilySpec::triangles(FamilyKind::Confocal, a, 1.0)?;
        let samples = sample_locus(&inc, 720, LocusSpace::Cosine)?;
        let cubic = samples
            .iter()
            .map(|s| s.residuals.cubic.unwrap().abs())
            .fold(0.0, f64::max);
        let pick = samples
            .iter()
            .map(|s| s.residuals.pick.unwrap().abs())
            .fold(0.0, f64::max);
        let width = samples.iter().map(|s| s.uv.0).fold(f64::NEG_INFINITY, f64::max)
            - samples.iter().map(|s| s.uv.0).fold(f64::INFINITY, f64::min);
        println!(
            "a/b={a}: width {width:.6}, max |cubic| {cubic:.1e}, max |pick| {pick:.1e}, hausdorff(incircle, confocal) {:.1e}",
            locus_hausdorff(&inc, &conf, 1024)?
        );
    }
    Ok(())
}
