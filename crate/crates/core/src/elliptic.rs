//! Complete elliptic integral of the first kind and the Jacobi functions
//! `sn`, `cn`, `dn`.
//!
//! The modulus is carried squared (`m_sq = m²`, the "parameter" in the
//! Abramowitz & Stegun convention). Both routines run off the same
//! arithmetic-geometric mean sequence: `K` is read from its limit, and the
//! Jacobi functions use the descending Landen (AGM phase) recursion of
//! A&S 16.4.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Maximum number of AGM steps. Convergence is quadratic once the gap is
/// small; even a complementary modulus of `1e-300` needs fewer than 16.
const MAX_AGM_DEPTH: usize = 32;
const AGM_GAP_TOL: f64 = 1e-16;

/// Squared elliptic modulus `m_sq = m²`, together with the complementary
/// modulus `sqrt(1 - m²)`.
///
/// The complementary modulus is kept separately because for thin caustics
/// `1 - m_sq` cancels catastrophically: a caustic with axis ratio `1e-7`
/// has `m_sq = 1 - 1e-14`, which retains only two digits of the ratio.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EllipticModulusSq {
    m_sq: f64,
    comp: f64,
}

impl EllipticModulusSq {
    /// Requires `0 <= m_sq < 1`.
    pub fn new(m_sq: f64) -> Result<Self> {
        if !m_sq.is_finite() || m_sq < 0.0 {
            return Err(Error::EllipticDomain {
                m_sq,
                reason: "squared modulus must be non-negative",
            });
        }
        if m_sq >= 1.0 {
            return Err(Error::EllipticDomain {
                m_sq,
                reason: "caustic degenerates to segment",
            });
        }
        Ok(Self {
            m_sq,
            comp: (1.0 - m_sq).sqrt(),
        })
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.m_sq
    }

    /// `sqrt(1 - m²)`.
    #[inline]
    pub fn complementary(self) -> f64 {
        self.comp
    }

    /// Modulus of a caustic with semi-axes `major >= minor > 0`:
    /// `m_sq = (major² - minor²) / major²`, complementary modulus
    /// `minor / major` exactly. `m_sq` may round to 1 for very thin
    /// caustics; the complementary modulus stays positive.
    pub fn from_caustic(major: f64, minor: f64) -> Result<Self> {
        let ratio = minor / major;
        if !(ratio > 0.0 && ratio <= 1.0) {
            return Err(Error::EllipticDomain {
                m_sq: 1.0 - ratio * ratio,
                reason: "caustic degenerates to segment",
            });
        }
        Ok(Self {
            m_sq: (1.0 - ratio) * (1.0 + ratio),
            comp: ratio,
        })
    }
}

/// The AGM sequence seeded with `a0 = 1`, `b0 = sqrt(1 - m²)`, `c0 = m`.
///
/// Returns the `(a_n, c_n)` pairs, index 0 being the seed.
fn agm_sequence(m: EllipticModulusSq) -> Vec<(f64, f64)> {
    let mut a = 1.0_f64;
    let mut b = m.comp;
    let mut c = m.m_sq.sqrt();
    let mut seq = Vec::with_capacity(8);
    seq.push((a, c));
    while c.abs() > AGM_GAP_TOL && seq.len() <= MAX_AGM_DEPTH {
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = a_next;
        b = b_next;
        seq.push((a, c));
    }
    seq
}

/// Complete elliptic integral of the first kind, `K(m) = π / (2 AGM(1, sqrt(1-m²)))`.
pub fn complete_k(m_sq: EllipticModulusSq) -> f64 {
    let seq = agm_sequence(m_sq);
    let (a_n, _) = *seq.last().expect("AGM sequence is never empty");
    FRAC_PI_2 / a_n
}

/// Values of the three Jacobi elliptic functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobi {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// `sn`, `cn`, `dn` at `u` for squared modulus `m_sq`.
///
/// `u` is first reduced modulo the real period `4K`, then shifted by `K` or
/// `2K` into `|w| <= K/2`, where the phase recursion gives every function
/// to full relative accuracy. Evaluating directly near `u = K` would leave
/// `cn = cos(phi)` with `phi` close to `π/2`, accurate only in absolute
/// terms; the thin caustics of near-half rotations depend on that value.
pub fn jacobi_sn_cn_dn(u: f64, m_sq: EllipticModulusSq) -> Jacobi {
    let seq = agm_sequence(m_sq);
    let depth = seq.len() - 1;
    let (a_n, _) = seq[depth];
    let k = FRAC_PI_2 / a_n;
    let period = 4.0 * k;
    let u = u - period * (u / period).round();

    if depth == 0 {
        let (s, c) = u.sin_cos();
        return Jacobi { sn: s, cn: c, dn: 1.0 };
    }

    let comp = m_sq.complementary();
    let near = |w: f64| phase_recursion(w, &seq, m_sq.get(), comp);
    let half = 0.5 * k;
    if u.abs() <= half {
        near(u)
    } else if u.abs() >= 3.0 * half {
        // sn(w ± 2K) = -sn w, cn(w ± 2K) = -cn w, dn(w ± 2K) = dn w
        let j = near(u - 2.0 * k * u.signum());
        Jacobi {
            sn: -j.sn,
            cn: -j.cn,
            dn: j.dn,
        }
    } else {
        // sn(w + K) = cn w / dn w, cn(w + K) = -m' sn w / dn w, dn(w + K) = m' / dn w,
        // and the mirror image for w - K
        let sign = u.signum();
        let j = near(u - k * sign);
        Jacobi {
            sn: sign * j.cn / j.dn,
            cn: -sign * comp * j.sn / j.dn,
            dn: comp / j.dn,
        }
    }
}

/// Descending Landen (AGM phase) recursion for `|u| <= K/2`.
fn phase_recursion(u: f64, seq: &[(f64, f64)], m_sq: f64, comp: f64) -> Jacobi {
    let depth = seq.len() - 1;
    let (a_n, _) = seq[depth];
    // phi_N = 2^N a_N u, then phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n)) / 2.
    let mut phi = a_n * u * (1u64 << depth) as f64;
    for n in (1..=depth).rev() {
        let (a, c) = seq[n];
        phi = 0.5 * (phi + (c / a * phi.sin()).asin());
    }
    let (sn, cn) = phi.sin_cos();
    // dn² = 1 - m² sn² = m'² + m² cn², written without the cancellation
    // in 1 - m²
    let dn = (comp * comp + m_sq * cn * cn).sqrt();
    Jacobi { sn, cn, dn }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn m(v: f64) -> EllipticModulusSq {
        EllipticModulusSq::new(v).unwrap()
    }

    #[test]
    fn k_at_zero_is_quarter_turn() {
        assert!((complete_k(m(0.0)) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn k_at_half() {
        assert_relative_eq!(complete_k(m(0.5)), 1.854_074_677_301_372, max_relative = 1e-14);
    }

    #[test]
    fn rejects_out_of_domain_modulus() {
        assert!(matches!(EllipticModulusSq::new(1.0), Err(Error::EllipticDomain { .. })));
        assert!(EllipticModulusSq::new(-0.1).is_err());
        assert!(EllipticModulusSq::new(f64::NAN).is_err());
    }

    #[test]
    fn k_is_increasing() {
        let mut prev = 0.0;
        for i in 0..100 {
            let k = complete_k(m(i as f64 / 100.0));
            assert!(k > prev);
            prev = k;
        }
    }

    #[test]
    fn origin_values() {
        for v in [0.0, 0.3, 0.9, 0.999] {
            let j = jacobi_sn_cn_dn(0.0, m(v));
            assert_eq!((j.sn, j.cn, j.dn), (0.0, 1.0, 1.0));
        }
    }

    #[test]
    fn trigonometric_degeneration() {
        for u in [-3.0, -0.4, 0.0, 1.1, 7.5] {
            let j = jacobi_sn_cn_dn(u, m(0.0));
            assert!((j.sn - f64::sin(u)).abs() < 1e-15);
            assert!((j.cn - f64::cos(u)).abs() < 1e-15);
            assert_eq!(j.dn, 1.0);
        }
    }

    #[test]
    fn thin_caustic_keeps_the_complementary_modulus() {
        let thin = EllipticModulusSq::from_caustic(1.0, 1e-9).unwrap();
        assert_eq!(thin.complementary(), 1e-9);
        // K ~ ln(4/m') for small m'
        let k = complete_k(thin);
        assert!((k - (4e9f64).ln()).abs() < 1e-12);
        let j = jacobi_sn_cn_dn(k, thin);
        assert!((j.dn - 1e-9).abs() < 1e-20);
        assert!(EllipticModulusSq::from_caustic(1.0, 0.0).is_err());
    }

    #[test]
    fn quarter_period_values() {
        let mm = m(0.5);
        let k = complete_k(mm);
        let j = jacobi_sn_cn_dn(k, mm);
        assert!((j.sn - 1.0).abs() < 1e-14);
        assert!(j.cn.abs() < 1e-14);
        assert!((j.dn - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn odd_and_even_symmetry() {
        let mm = m(0.7);
        for u in [0.1, 0.9, 2.3, 5.0] {
            let p = jacobi_sn_cn_dn(u, mm);
            let q = jacobi_sn_cn_dn(-u, mm);
            assert!((p.sn + q.sn).abs() < 1e-13);
            assert!((p.cn - q.cn).abs() < 1e-13);
            assert!((p.dn - q.dn).abs() < 1e-13);
        }
    }
}
