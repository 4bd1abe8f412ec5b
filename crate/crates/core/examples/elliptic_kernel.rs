//! The Jacobi elliptic kernel: `K(m)` and `sn`, `cn`, `dn` over a period.
//!
//! ```text
//! cargo run --example elliptic_kernel
//! ```

use plectrum::elliptic::{complete_k, jacobi_sn_cn_dn, EllipticModulusSq};

fn main() -> plectrum::Result<()> {
    println!("{:>6} {:>20}", "m^2", "K(m)");
    for m_sq in [0.0, 0.25, 0.5, 0.75, 0.9, 0.99] {
        println!("{m_sq:>6} {:>20.16}", complete_k(EllipticModulusSq::new(m_sq)?));
    }

    let m = EllipticModulusSq::new(0.5)?;
    let k = complete_k(m);
    println!("\nm^2 = 0.5, one real period in steps of K/4");
    println!("{:>8} {:>20} {:>20} {:>20}", "u/K", "sn", "cn", "dn");
    for i in 0..=16 {
        let u = k * i as f64 / 4.0;
        let j = jacobi_sn_cn_dn(u, m);
        println!("{:>8.2} {:>20.16} {:>20.16} {:>20.16}", u / k, j.sn, j.cn, j.dn);
    }

    // the caustic of a billiard gives m through its axes
    let thin = EllipticModulusSq::from_caustic(1.0, 1e-6)?;
    println!(
        "\ncaustic (1, 1e-6): m^2 = {:.17}, m' = {:e}, K = {:.15}",
        thin.get(),
        thin.complementary(),
        complete_k(thin)
    );
    Ok(())
}
