//! The two axis stretches relating the triangle families: incircle to
//! confocal (billiard) and circumcircle to excentral.

use plectrum::conics::{
    cayley_residual, confocal_scale, derived_radii, excentral_locus_axes, excentral_scale, r_over_R_confocal,
};
use plectrum::families::{FamilyKind, FamilySpec};

fn main() -> plectrum::Result<()> {
    println!(
        "{:>5} {:>12} {:>12} {:>14} {:>14} {:>12}",
        "a/b", "s", "s'", "a_e", "b_e", "r/R"
    );
    for a in [1.1, 1.5, 2.0, 3.0] {
        let b = 1.0;
        let (s, se) = (confocal_scale(a, b), excentral_scale(a, b));
        // the excentral family's caustic is the billiard table (s' a, b);
        // its excenters sweep an ellipse whose minor axis is a + b
        let (a_e, b_e) = excentral_locus_axes(se * a, b);
        let table = (s * a, b);
        println!(
            "{a:>5} {s:>12.9} {se:>12.9} {a_e:>14.10} {b_e:>14.10} {:>12.9}",
            r_over_R_confocal(table.0, table.1)
        );
    }

    let r = derived_radii(2.0, 1.0);
    println!(
        "\n(2,1): incircle r = {}, circumcircle R = {}",
        r.incircle_r, r.circumcircle_r
    );
    for kind in [
        FamilyKind::Incircle,
        FamilyKind::Confocal,
        FamilyKind::Circumcircle,
        FamilyKind::Excentral,
    ] {
        let pair = FamilySpec::triangles(kind, 2.0, 1.0)?.conic_pair()?;
        println!(
            "{:>12}: outer ({:.6}, {:.6}) caustic ({:.6}, {:.6}) cayley {:+.1e} confocal {}",
            kind.to_string(),
            pair.outer.a,
            pair.outer.b,
            pair.caustic.a,
            pair.caustic.b,
            cayley_residual(&pair),
            pair.is_confocal(1e-12)
        );
    }
    Ok(())
}
