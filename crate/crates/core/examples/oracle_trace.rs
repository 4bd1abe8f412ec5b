//! Bounce a ray around an elliptic table and compare with the closed-form
//! orbit: a check on the Jacobi-based construction that shares no code with it.

use plectrum::families::FamilySpec;
use plectrum::oracle::{max_tangency_residual, reflection_residual, trace_closure, Ray};

fn main() -> plectrum::Result<()> {
    let spec = FamilySpec::billiard_in(2.0, 1.0, 5, 2)?;
    let pair = spec.conic_pair()?;
    let orbit = spec.member(0.4)?;
    let start = Ray::through(orbit.vertex(0), orbit.vertex(1))?;
    let (traced, closure) = trace_closure(&start, &pair.outer, orbit.len())?;

    println!(
        "pentagram orbit in ({}, {}), caustic ({:.12}, {:.12})",
        pair.outer.a, pair.outer.b, pair.caustic.a, pair.caustic.b
    );
    for (k, (p, q)) in orbit.vertices().iter().zip(traced.vertices()).enumerate() {
        println!(
            "  vertex {k}: closed form ({:+.12}, {:+.12})  traced ({:+.12}, {:+.12})",
            p.x, p.y, q.x, q.y
        );
    }
    println!("closure error       {closure:.1e}");
    println!("reflection residual {:.1e}", reflection_residual(&orbit, &pair.outer)?);
    println!(
        "tangency residual   {:.1e}",
        max_tangency_residual(&traced, &pair.caustic)?
    );
    Ok(())
}
