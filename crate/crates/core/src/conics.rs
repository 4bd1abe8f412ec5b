//! Origin-centred, axis-aligned ellipses and the closed forms relating the
//! incircle, confocal, circumcircle and excentral triangle families.
//!
//! Semi-axes are positional: `a` lies along x and `b` along y, with no
//! ordering between them. The affine scalings below can turn the x axis
//! into the minor one.

use crate::error::{Error, Result};
use crate::geometry::Vec2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    pub a: f64,
    pub b: f64,
}

impl Ellipse {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        check_positive("a", a)?;
        check_positive("b", b)?;
        Ok(Self { a, b })
    }

    pub fn circle(r: f64) -> Result<Self> {
        Self::new(r, r)
    }

    /// `a² - b²`; negative when the foci sit on the y axis.
    pub fn focal_sq(&self) -> f64 {
        (self.a - self.b) * (self.a + self.b)
    }

    pub fn point_at(&self, t: f64) -> Vec2 {
        Vec2::new(self.a * t.cos(), self.b * t.sin())
    }

    /// `x²/a² + y²/b² - 1`.
    pub fn residual(&self, p: Vec2) -> f64 {
        let (u, v) = (p.x / self.a, p.y / self.b);
        u * u + v * v - 1.0
    }

    /// Outward (unnormalized) normal `(x/a², y/b²)` at a point on the ellipse.
    pub fn gradient(&self, p: Vec2) -> Vec2 {
        Vec2::new(p.x / (self.a * self.a), p.y / (self.b * self.b))
    }

    /// Unit tangent at `p`, oriented counter-clockwise.
    pub fn tangent(&self, p: Vec2) -> Vec2 {
        self.gradient(p).perp().normalized()
    }

    pub fn scaled(&self, sx: f64, sy: f64) -> Result<Self> {
        Self::new(self.a * sx, self.b * sy)
    }

    /// Foci as a pair, on whichever axis is the major one.
    pub fn foci(&self) -> (Vec2, Vec2) {
        let f = self.focal_sq();
        if f >= 0.0 {
            let c = f.sqrt();
            (Vec2::new(-c, 0.0), Vec2::new(c, 0.0))
        } else {
            let c = (-f).sqrt();
            (Vec2::new(0.0, -c), Vec2::new(0.0, c))
        }
    }
}

/// An outer ellipse and the caustic nested inside it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicPair {
    pub outer: Ellipse,
    pub caustic: Ellipse,
}

impl ConicPair {
    pub fn new(outer: Ellipse, caustic: Ellipse) -> Result<Self> {
        if caustic.a >= outer.a || caustic.b >= outer.b {
            return Err(Error::InvalidParameter(format!(
                "caustic ({}, {}) is not strictly inside outer ({}, {})",
                caustic.a, caustic.b, outer.a, outer.b
            )));
        }
        Ok(Self { outer, caustic })
    }

    pub fn is_confocal(&self, tol: f64) -> bool {
        let scale = self.outer.a.max(self.outer.b).powi(2);
        (self.outer.focal_sq() - self.caustic.focal_sq()).abs() <= tol * scale
    }
}

/// `a_c/a + b_c/b - 1`, zero exactly when the pair carries a Poncelet
/// triangle family.
pub fn cayley_residual(pair: &ConicPair) -> f64 {
    pair.caustic.a / pair.outer.a + pair.caustic.b / pair.outer.b - 1.0
}

/// Radii fixed by the Cayley condition for the circle-based families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedRadii {
    /// Incircle radius of triangles inscribed in ellipse `(a, b)`: `ab/(a+b)`.
    pub incircle_r: f64,
    /// Circumcircle radius of triangles around caustic `(a, b)`: `a+b`.
    pub circumcircle_r: f64,
    /// Circumradius shared by every incircle-family triangle: `(a+b)/2`.
    pub incircle_family_circumradius: f64,
}

pub fn derived_radii(a: f64, b: f64) -> DerivedRadii {
    DerivedRadii {
        incircle_r: a * b / (a + b),
        circumcircle_r: a + b,
        incircle_family_circumradius: 0.5 * (a + b),
    }
}

/// Scale along x taking the incircle pair of ellipse `(a, b)` to a
/// confocal pair: `sqrt((b⁴ + 2ab³) / (a⁴ + 2ba³))`.
pub fn confocal_scale(a: f64, b: f64) -> f64 {
    // (b⁴ + 2ab³)/(a⁴ + 2ba³) = b³(b + 2a) / (a³(a + 2b))
    ((b / a).powi(3) * (b + 2.0 * a) / (a + 2.0 * b)).sqrt()
}

/// Scale along x taking the circumcircle family of caustic `(a, b)` to the
/// excentral family: `sqrt((2b² + ab) / (2a² + ab))`.
pub fn excentral_scale(a: f64, b: f64) -> f64 {
    (b * (2.0 * b + a) / (a * (2.0 * a + b))).sqrt()
}

fn delta(alpha: f64, beta: f64) -> f64 {
    let (a2, b2) = (alpha * alpha, beta * beta);
    (a2 * a2 - a2 * b2 + b2 * b2).sqrt()
}

/// Invariant `r/R` of billiard triangles in the ellipse `(alpha, beta)`.
///
/// Evaluated as `2α²β² / ((δ+α²)(δ+β²))`, which equals
/// `2(δ-β²)(α²-δ)/(α²-β²)²` and is regular at `α = β` (value 1/2).
#[allow(non_snake_case)]
pub fn r_over_R_confocal(alpha: f64, beta: f64) -> f64 {
    let (a2, b2) = (alpha * alpha, beta * beta);
    let d = delta(alpha, beta);
    2.0 * a2 * b2 / ((d + a2) * (d + b2))
}

/// Semi-axes `(a_e, b_e)` of the ellipse traced by the excenters of
/// billiard triangles in the ellipse `(alpha, beta)`.
pub fn excentral_locus_axes(alpha: f64, beta: f64) -> (f64, f64) {
    let d = delta(alpha, beta);
    ((beta * beta + d) / alpha, (alpha * alpha + d) / beta)
}

/// Inverse of the excentral scaling: the circumcircle-family caustic
/// `(a, b)` whose `excentral_scale` image has caustic `(alpha, beta)`.
///
/// `b = beta` and `a` is the positive root of
/// `beta a² + 2(beta² - alpha²) a - alpha² beta = 0`.
pub fn circumcircle_caustic_for_table(alpha: f64, beta: f64) -> (f64, f64) {
    let p = beta * beta - alpha * alpha;
    let a = (-p + (p * p + alpha * alpha * beta * beta).sqrt()) / beta;
    (a, beta)
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}
