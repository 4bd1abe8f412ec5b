//! Vertex constructors for the triangle families and billiard N-periodics.
//!
//! Four closed-form triangle families are built here:
//!
//! * **incircle**: inscribed in ellipse `(a, b)`, around the circle of
//!   radius `ab/(a+b)`;
//! * **confocal**: the incircle family stretched by [`confocal_scale`]
//!   along x, which makes it a billiard family;
//! * **circumcircle**: inscribed in the circle of radius `a+b`, around
//!   the ellipse `(a, b)`;
//! * **excentral**: the circumcircle family stretched by
//!   [`excentral_scale`], the excentral triangles of a billiard family.
//!
//! General N-periodics come from the universal-measure parametrization in
//! Jacobi elliptic functions, see [`UniversalMeasure`].

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::conics::{confocal_scale, derived_radii, excentral_scale, ConicPair, Ellipse};
use crate::elliptic::{complete_k, jacobi_sn_cn_dn, EllipticModulusSq};
use crate::error::{Error, Result};
use crate::geometry::{as_triangle, Polygon, TriangleMetrics, Vec2};

/// Radicands more negative than this (relative) are a parametrization bug
/// rather than rounding.
const RADICAND_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Incircle,
    Confocal,
    Circumcircle,
    Excentral,
    BilliardN,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Incircle,
        FamilyKind::Confocal,
        FamilyKind::Circumcircle,
        FamilyKind::Excentral,
        FamilyKind::BilliardN,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Incircle => "incircle",
            FamilyKind::Confocal => "confocal",
            FamilyKind::Circumcircle => "circumcircle",
            FamilyKind::Excentral => "excentral",
            FamilyKind::BilliardN => "billiard",
        }
    }

    /// Families whose triangles conserve a product (rather than a sum) of cosines.
    pub fn conserves_product(self) -> bool {
        matches!(self, FamilyKind::Circumcircle | FamilyKind::Excentral)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family kind '{s}'")))
    }
}

/// One Poncelet family.
///
/// `a`, `b` are the outer semi-axes for `Incircle`/`Confocal` (before the
/// confocal stretch), the caustic semi-axes for `Circumcircle`/`Excentral`
/// (before the excentral stretch), and the caustic semi-axes for
/// `BilliardN`. `n` and `tau` only matter for `BilliardN`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub tau: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, a: f64, b: f64, n: usize, tau: usize) -> Result<Self> {
        let spec = Self { kind, a, b, n, tau };
        spec.validate()?;
        Ok(spec)
    }

    pub fn triangles(kind: FamilyKind, a: f64, b: f64) -> Result<Self> {
        if kind == FamilyKind::BilliardN {
            return Err(Error::InvalidParameter("billiard families need n and tau".into()));
        }
        Self::new(kind, a, b, 3, 1)
    }

    pub fn billiard(a_c: f64, b_c: f64, n: usize, tau: usize) -> Result<Self> {
        Self::new(FamilyKind::BilliardN, a_c, b_c, n, tau)
    }

    /// The `(n, tau)` billiard family of the table `(alpha, beta)`, with its
    /// caustic found by [`solve_confocal_caustic`].
    pub fn billiard_in(alpha: f64, beta: f64, n: usize, tau: usize) -> Result<Self> {
        let caustic = solve_confocal_caustic(alpha, beta, n, tau)?;
        Self::billiard(caustic.a, caustic.b, n, tau)
    }

    pub fn validate(&self) -> Result<()> {
        Ellipse::new(self.a, self.b)?;
        if self.kind == FamilyKind::BilliardN {
            UniversalMeasure::new(self.a, self.b, self.n, self.tau)?;
        }
        Ok(())
    }

    /// Number of vertices per member.
    pub fn vertex_count(&self) -> usize {
        match self.kind {
            FamilyKind::BilliardN => self.n,
            _ => 3,
        }
    }

    /// Length of one period of the family parameter: `2π` for the
    /// trigonometric families, `4K` for the universal measure.
    pub fn period(&self) -> Result<f64> {
        match self.kind {
            FamilyKind::BilliardN => Ok(UniversalMeasure::new(self.a, self.b, self.n, self.tau)?.period()),
            _ => Ok(TAU),
        }
    }

    /// The member at parameter `param` (`t`, `phi` or `u` depending on kind).
    pub fn member(&self, param: f64) -> Result<Polygon> {
        match self.kind {
            FamilyKind::Incircle => incircle_triangle(self.a, self.b, param),
            FamilyKind::Confocal => confocal_triangle(self.a, self.b, param),
            FamilyKind::Circumcircle => circumcircle_triangle(self.a, self.b, param),
            FamilyKind::Excentral => excentral_family_triangle(self.a, self.b, param),
            FamilyKind::BilliardN => billiard_periodic(self.a, self.b, self.n, self.tau, param),
        }
    }

    /// `n` members at closed-open uniform parameters over one period.
    pub fn members(&self, n: usize) -> Result<Vec<(f64, Polygon)>> {
        let period = self.period()?;
        match self.kind {
            FamilyKind::BilliardN => {
                let um = UniversalMeasure::new(self.a, self.b, self.n, self.tau)?;
                uniform_grid(period, n).map(|u| Ok((u, um.polygon(u)?))).collect()
            }
            _ => uniform_grid(period, n).map(|t| Ok((t, self.member(t)?))).collect(),
        }
    }

    /// The outer conic carrying the vertices and the caustic touched by
    /// every side.
    pub fn conic_pair(&self) -> Result<ConicPair> {
        let (a, b) = (self.a, self.b);
        let (outer, caustic) = match self.kind {
            FamilyKind::Incircle => (Ellipse::new(a, b)?, Ellipse::circle(derived_radii(a, b).incircle_r)?),
            FamilyKind::Confocal => {
                let s = confocal_scale(a, b);
                let r = derived_radii(a, b).incircle_r;
                (Ellipse::new(s * a, b)?, Ellipse::new(s * r, r)?)
            }
            FamilyKind::Circumcircle => (Ellipse::circle(a + b)?, Ellipse::new(a, b)?),
            FamilyKind::Excentral => {
                let s = excentral_scale(a, b);
                (Ellipse::new(s * (a + b), a + b)?, Ellipse::new(s * a, b)?)
            }
            FamilyKind::BilliardN => {
                let um = UniversalMeasure::new(a, b, self.n, self.tau)?;
                (um.outer, Ellipse::new(a, b)?)
            }
        };
        ConicPair::new(outer, caustic)
    }
}

/// `n` points `period * i / n`, `i = 0..n`.
pub fn uniform_grid(period: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| period * i as f64 / n as f64)
}

/// Incircle-family triangle with first vertex `(a cos t, b sin t)`.
pub fn incircle_triangle(a: f64, b: f64, t: f64) -> Result<Polygon> {
    Ellipse::new(a, b)?;
    let c2 = (a - b) * (a + b);
    let (st, ct) = t.sin_cos();
    let ct2 = ct * ct;
    let w1 = (c2 * (a + b).powi(2) * ct2 + 2.0 * a * b.powi(3) + b.powi(4)).sqrt();
    let w2 = -a * b / ((c2 * ct2 + b * b) * (a + b));
    let p1 = Vec2::new(a * ct, b * st);
    let p2 = Vec2::new(a * a * ct - w1 * st, b * b * st + w1 * ct) * w2;
    let p3 = Vec2::new(a * a * ct + w1 * st, b * b * st - w1 * ct) * w2;
    Polygon::new(vec![p1, p2, p3])
}

/// Incircle triangle stretched by the confocal scale along x.
pub fn confocal_triangle(a: f64, b: f64, t: f64) -> Result<Polygon> {
    incircle_triangle(a, b, t)?.scaled(confocal_scale(a, b), 1.0)
}

/// Circumcircle-family triangle with first vertex `(a+b)(cos phi, sin phi)`.
///
/// The closed form covers the upper half circle in terms of `u = cos phi`;
/// the lower half is its mirror image in the x axis.
pub fn circumcircle_triangle(a: f64, b: f64, phi: f64) -> Result<Polygon> {
    Ellipse::new(a, b)?;
    let c2 = (a - b) * (a + b);
    let (sin_phi, u) = phi.sin_cos();
    let u2 = u * u;
    let s = (1.0 - u2).max(0.0).sqrt();
    let head = a.powi(3) * (a + 2.0 * b);
    let radicand = head - c2 * (a + b).powi(2) * u2;
    if radicand < -RADICAND_SLACK * head {
        return Err(Error::NegativeRadicand(radicand));
    }
    let w = radicand.max(0.0).sqrt();
    let denom = (u2 - 1.0) * a * a - b * b * u2;
    let p1 = Vec2::new(u, s) * (a + b);
    let p2 = Vec2::new((b * b * u - s * w) * a, (s * a * a + w * u) * b) / denom;
    let p3 = Vec2::new((b * b * u + s * w) * a, (s * a * a - w * u) * b) / denom;
    let mut vertices = vec![p1, p2, p3];
    if sin_phi < 0.0 {
        for v in &mut vertices {
            v.y = -v.y;
        }
    }
    Polygon::new(vertices)
}

/// Circumcircle triangle stretched by the excentral scale along x.
pub fn excentral_family_triangle(a: f64, b: f64, phi: f64) -> Result<Polygon> {
    circumcircle_triangle(a, b, phi)?.scaled(excentral_scale(a, b), 1.0)
}

/// Triangle of the three excenters; vertex `i` is the excenter opposite
/// vertex `i` of `tri`.
pub fn excentral_of(tri: &Polygon) -> Result<Polygon> {
    let p = as_triangle(tri)?;
    let l = TriangleMetrics::of(tri)?.sides;
    let excenter = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        (p[j] * l[j] + p[k] * l[k] - p[i] * l[i]) / (l[j] + l[k] - l[i])
    };
    Polygon::new((0..3).map(excenter).collect())
}

/// Triangle of the altitude feet; vertex `i` is the foot from vertex `i`.
/// Only defined here for acute triangles.
pub fn orthic_of(tri: &Polygon) -> Result<Polygon> {
    let p = as_triangle(tri)?;
    TriangleMetrics::of(tri)?;
    let cos = tri.internal_cosines()?;
    if cos.iter().any(|&c| c <= 0.0) {
        return Err(Error::NotAcute([cos[0], cos[1], cos[2]]));
    }
    let foot = |i: usize| {
        let (b, c) = (p[(i + 1) % 3], p[(i + 2) % 3]);
        let d = c - b;
        b + d * ((p[i] - b).dot(d) / d.norm_sq())
    };
    Polygon::new((0..3).map(foot).collect())
}

/// Polygon cut out by the tangents to `outer` at the vertices of `poly`;
/// vertex `i` is where the tangents at vertices `i` and `i + 1` meet.
pub fn outer_polygon(poly: &Polygon, outer: &Ellipse) -> Result<Polygon> {
    for p in poly.vertices() {
        let r = outer.residual(*p);
        if r.abs() > 1e-9 {
            return Err(Error::OffTable(r));
        }
    }
    let n = poly.len();
    let mut vertices = Vec::with_capacity(n);
    for i in 0..n {
        let j = (i + 1) % n;
        // tangent at P is { X : grad(P) . X = 1 }
        let g1 = outer.gradient(poly.vertex(i));
        let g2 = outer.gradient(poly.vertex(j));
        let det = g1.cross(g2);
        if det.abs() <= 1e-12 * g1.norm() * g2.norm() {
            return Err(Error::ParallelTangents(i, j));
        }
        vertices.push(Vec2::new(g2.y - g1.y, g1.x - g2.x) / det);
    }
    Polygon::new(vertices)
}

/// Internal-angle cosines, see [`Polygon::internal_cosines`].
pub fn internal_cosines(poly: &Polygon) -> Result<Vec<f64>> {
    poly.internal_cosines()
}

/// Universal-measure parametrization of the `(n, tau)` billiard family
/// around the caustic `(a_c, b_c)`, `a_c >= b_c`.
///
/// Vertex `i` (1-based) at parameter `u` is
/// `(-a sn(u + iΔu), b cn(u + iΔu))` with `Δu = 4τK/n`,
/// `b = b_c / cn(Δu/2)` and `a² = b² + a_c² - b_c²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniversalMeasure {
    pub caustic: Ellipse,
    pub n: usize,
    pub tau: usize,
    pub m_sq: EllipticModulusSq,
    /// Quarter period `K(m)`.
    pub quarter_period: f64,
    pub step: f64,
    /// The billiard table.
    pub outer: Ellipse,
}

impl UniversalMeasure {
    pub fn new(a_c: f64, b_c: f64, n: usize, tau: usize) -> Result<Self> {
        let caustic = Ellipse::new(a_c, b_c)?;
        if a_c < b_c {
            return Err(Error::CanonicalizeAxes { a_c, b_c });
        }
        check_rotation(n, tau)?;
        let m_sq = EllipticModulusSq::from_caustic(a_c, b_c)?;
        let k = complete_k(m_sq);
        let step = 4.0 * tau as f64 * k / n as f64;
        let cn_half = jacobi_sn_cn_dn(0.5 * step, m_sq).cn;
        if cn_half <= 0.0 {
            return Err(Error::ParametrizationBreakdown { cn: cn_half, n, tau });
        }
        let b = b_c / cn_half;
        let a = (b * b + (a_c - b_c) * (a_c + b_c)).sqrt();
        Ok(Self {
            caustic,
            n,
            tau,
            m_sq,
            quarter_period: k,
            step,
            outer: Ellipse::new(a, b)?,
        })
    }

    pub fn period(&self) -> f64 {
        4.0 * self.quarter_period
    }

    pub fn vertex(&self, v: f64) -> Vec2 {
        let j = jacobi_sn_cn_dn(v, self.m_sq);
        Vec2::new(-self.outer.a * j.sn, self.outer.b * j.cn)
    }

    pub fn polygon(&self, u: f64) -> Result<Polygon> {
        Polygon::new((1..=self.n).map(|i| self.vertex(u + i as f64 * self.step)).collect())
    }
}

/// Member at parameter `u` of the `(n, tau)` billiard family around the
/// caustic `(a_c, b_c)`; see [`UniversalMeasure`].
pub fn billiard_periodic(a_c: f64, b_c: f64, n: usize, tau: usize, u: f64) -> Result<Polygon> {
    UniversalMeasure::new(a_c, b_c, n, tau)?.polygon(u)
}

/// Caustic of the `(n, tau)` billiard orbits in the table `(alpha, beta)`,
/// `alpha > beta`.
///
/// The caustic is confocal with the table, so only `b_c` is free; it is
/// found by bisection on `b_c / cn(2τK/n, m) - beta` over `(0, beta)`.
pub fn solve_confocal_caustic(alpha: f64, beta: f64, n: usize, tau: usize) -> Result<Ellipse> {
    Ellipse::new(alpha, beta)?;
    if alpha <= beta {
        return Err(Error::InvalidParameter(format!(
            "table needs alpha > beta, got ({alpha}, {beta})"
        )));
    }
    check_rotation(n, tau)?;
    let no_caustic = || Error::NoCaustic { alpha, beta, n, tau };
    if 2 * tau >= n {
        return Err(no_caustic());
    }
    let focal = (alpha - beta) * (alpha + beta);
    let g = |b_c: f64| -> Result<f64> {
        let a_c = (b_c * b_c + focal).sqrt();
        let m_sq = EllipticModulusSq::from_caustic(a_c, b_c)?;
        let half_step = 2.0 * tau as f64 * complete_k(m_sq) / n as f64;
        Ok(b_c / jacobi_sn_cn_dn(half_step, m_sq).cn - beta)
    };

    // near-degenerate caustics are needed as tau/n approaches 1/2 on
    // eccentric tables
    let mut lo = 1e-12 * beta;
    let mut hi = beta;
    if !(g(lo)? < 0.0 && g(hi)? > 0.0) {
        return Err(no_caustic());
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let gm = g(mid)?;
        if gm.abs() <= 1e-13 * beta || hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
        if gm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ellipse::new((mid * mid + focal).sqrt(), mid)
}

fn check_rotation(n: usize, tau: usize) -> Result<()> {
    if n < 3 || tau < 1 || gcd(n, tau) != 1 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3, tau >= 1 and gcd(n, tau) = 1, got n = {n}, tau = {tau}"
        )));
    }
    Ok(())
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
