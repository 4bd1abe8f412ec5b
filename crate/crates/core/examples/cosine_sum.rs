//! Incircle and confocal triangles conserve the same sum of cosines.

use plectrum::families::{FamilyKind, FamilySpec};
use plectrum::invariants::{cosine_sum_target, sweep_all, DEFAULT_TOL};

fn main() -> plectrum::Result<()> {
    for a in [1.1, 1.5, 2.0, 3.0] {
        println!("a/b = {a}, expected sum {:.16}", cosine_sum_target(a, 1.0));
        for kind in [FamilyKind::Incircle, FamilyKind::Confocal] {
            let spec = FamilySpec::triangles(kind, a, 1.0)?;
            for r in sweep_all(&spec, 1000, DEFAULT_TOL)? {
                println!(
                    "  {:>9} {:<10} mean {:.16} max dev {:.1e} {}",
                    kind.to_string(),
                    r.quantity.name(),
                    r.mean,
                    r.max_abs_deviation,
                    if r.passed { "ok" } else { "FAILED" }
                );
            }
        }
    }

    let tri = FamilySpec::triangles(FamilyKind::Confocal, 2.0, 1.0)?.member(0.7)?;
    let cos = tri.internal_cosines()?;
    println!(
        "\nconfocal (2,1) at t=0.7: cosines {cos:.9?}, sum {:.15}",
        cos.iter().sum::<f64>()
    );
    Ok(())
}
