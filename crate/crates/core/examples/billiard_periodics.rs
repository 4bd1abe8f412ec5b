//! N-periodic billiard orbits from the universal-measure parametrization:
//! solve the caustic for a table and rotation, then sweep the family.

use plectrum::conics::r_over_R_confocal;
use plectrum::families::{outer_polygon, FamilySpec, UniversalMeasure};
use plectrum::invariants::{sweep_all, DEFAULT_TOL};

fn main() -> plectrum::Result<()> {
    let (alpha, beta) = (2.0, 1.0);
    println!(
        "table ({alpha}, {beta}); 1 + r/R = {:.12}",
        1.0 + r_over_R_confocal(alpha, beta)
    );
    println!(
        "{:>3} {:>4} {:>14} {:>14} {:>18} {:>10} {:>18}",
        "n", "tau", "caustic a", "caustic b", "cos sum", "dev", "perimeter"
    );
    for (n, tau) in [(3, 1), (4, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3), (12, 5)] {
        let spec = FamilySpec::billiard_in(alpha, beta, n, tau)?;
        let reports = sweep_all(&spec, 500, DEFAULT_TOL)?;
        println!(
            "{n:>3} {tau:>4} {:>14.10} {:>14.10} {:>18.14} {:>10.1e} {:>18.14}",
            spec.a, spec.b, reports[0].mean, reports[0].max_abs_deviation, reports[1].mean
        );
    }

    // the tangents at a 4-periodic's vertices bound the outer polygon
    let um = UniversalMeasure::new(0.5, 0.4, 4, 1)?;
    let p = um.polygon(0.3)?;
    let outer = outer_polygon(&p, &um.outer)?;
    let xy = |q: &plectrum::geometry::Polygon| q.vertices().iter().map(|v| (v.x, v.y)).collect::<Vec<_>>();
    println!("\n4-periodic around (0.5, 0.4): {:.6?}", xy(&p));
    println!("its outer polygon:            {:.6?}", xy(&outer));
    Ok(())
}
