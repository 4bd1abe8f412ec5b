//! Brute-force billiard checks, independent of the closed-form families:
//! ray tracing with elastic reflection, side tangency against a conic and
//! the angle-bisection property at each bounce.

use std::f64::consts::PI;

use crate::conics::Ellipse;
use crate::error::{Error, Result};
use crate::geometry::{Polygon, Vec2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    pub origin: Vec2,
    direction: Vec2,
}

impl Ray {
    /// `direction` is normalized here.
    pub fn new(origin: Vec2, direction: Vec2) -> Result<Self> {
        let n = direction.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidParameter("ray direction must be nonzero".into()));
        }
        Ok(Self {
            origin,
            direction: direction / n,
        })
    }

    pub fn through(from: Vec2, to: Vec2) -> Result<Self> {
        Self::new(from, to - from)
    }

    pub fn direction(&self) -> Vec2 {
        self.direction
    }
}

/// Follow `ray` to its far intersection with `table` and reflect it about
/// the tangent there.
pub fn reflect_step(ray: &Ray, table: &Ellipse) -> Result<Ray> {
    let (p, d) = (ray.origin, ray.direction);
    let (ia2, ib2) = (1.0 / (table.a * table.a), 1.0 / (table.b * table.b));
    let qa = d.x * d.x * ia2 + d.y * d.y * ib2;
    let qb = 2.0 * (p.x * d.x * ia2 + p.y * d.y * ib2);
    let qc = table.residual(p);
    if qc > 1e-10 {
        return Err(Error::OffTable(qc));
    }
    let disc = qb * qb - 4.0 * qa * qc;
    // a vanishing discriminant with the origin on the table means grazing incidence
    if disc <= 1e-24 * qb.abs().max(qa) {
        return Err(Error::TangentRay);
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let roots = if q == 0.0 { [0.0, 0.0] } else { [q / qa, qc / q] };
    let s = roots[0].max(roots[1]);
    let scale = table.a.max(table.b);
    if s <= 1e-12 * scale {
        return Err(Error::TangentRay);
    }
    let hit = p + d * s;
    let normal = table.gradient(hit).normalized();
    let out = d - normal * (2.0 * d.dot(normal));
    Ray::new(hit, out)
}

/// Bounce `n` times from `start`. The polygon holds the start point and the
/// first `n - 1` impacts; the closure error compares the `n`-th bounce with
/// the start (position plus direction).
pub fn trace_closure(start: &Ray, table: &Ellipse, n: usize) -> Result<(Polygon, f64)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3 bounces, got {n}")));
    }
    let mut ray = *start;
    let mut vertices = vec![start.origin];
    for _ in 0..n {
        ray = reflect_step(&ray, table)?;
        vertices.push(ray.origin);
    }
    vertices.pop();
    let err = (ray.origin - start.origin).norm() + (ray.direction - start.direction).norm();
    Ok((Polygon::new(vertices)?, err))
}

/// How far the line through `p` and `q` is from tangency with `conic`:
/// writing the line as `ux + vy = 1`, the dual-conic value
/// `|a²u² + b²v² - 1|`. Lines through the origin use the homogeneous form
/// with unit normal.
pub fn tangency_residual(p: Vec2, q: Vec2, conic: &Ellipse) -> Result<f64> {
    if p == q {
        return Err(Error::Degenerate("tangency of a zero-length segment".into()));
    }
    let n = (q - p).perp().normalized();
    let h = n.dot(p);
    let (a2, b2) = (conic.a * conic.a, conic.b * conic.b);
    let homogeneous = a2 * n.x * n.x + b2 * n.y * n.y - h * h;
    if h.abs() <= 1e-12 * conic.a.max(conic.b) {
        Ok(homogeneous.abs())
    } else {
        Ok((homogeneous / (h * h)).abs())
    }
}

/// Largest tangency residual over the sides of `poly`.
pub fn max_tangency_residual(poly: &Polygon, conic: &Ellipse) -> Result<f64> {
    poly.edges()
        .map(|(p, q)| tangency_residual(p, q, conic))
        .try_fold(0.0, |acc, r| Ok(f64::max(acc, r?)))
}

/// Largest violation, in radians, of equal incidence and reflection angles
/// against the tangent of `table` over the vertices of `poly`.
pub fn reflection_residual(poly: &Polygon, table: &Ellipse) -> Result<f64> {
    let n = poly.len();
    let mut worst = 0.0_f64;
    for i in 0..n {
        let v = poly.vertex(i);
        let r = table.residual(v);
        if r.abs() > 1e-8 {
            return Err(Error::OffTable(r));
        }
        let t = table.tangent(v);
        let incoming = v - poly.vertex(i + n - 1);
        let outgoing = poly.vertex(i + 1) - v;
        let angle_in = t.cross(incoming).atan2(t.dot(incoming));
        let angle_out = t.cross(outgoing).atan2(t.dot(outgoing));
        worst = worst.max(wrap_angle(angle_in + angle_out).abs());
    }
    Ok(worst)
}

fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}
