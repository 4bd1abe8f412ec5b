//! Planar points and closed polygons.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, o: Self) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Self) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Self {
        self / self.norm()
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn scale_xy(self, sx: f64, sy: f64) -> Self {
        Self::new(self.x * sx, self.y * sy)
    }

    pub fn dist(self, o: Self) -> f64 {
        (self - o).norm()
    }
}

impl Add for Vec2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

/// A closed polygon; vertex `i` connects to vertex `(i + 1) mod N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
}

impl Polygon {
    /// Requires at least three vertices and no coincident neighbours
    /// (separation at least `1e-12` times the diameter).
    pub fn new(vertices: Vec<Vec2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate(format!("{n} vertices, need at least 3")));
        }
        if vertices.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::Degenerate("non-finite vertex".into()));
        }
        let diameter = vertices
            .iter()
            .flat_map(|p| vertices.iter().map(move |q| p.dist(*q)))
            .fold(0.0, f64::max);
        let min_sep = 1e-12 * diameter;
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].dist(vertices[j]) <= min_sep {
                return Err(Error::Degenerate(format!("vertices {i} and {j} coincide")));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edges as `(from, to)` pairs, edge `i` running from vertex `i` to `i + 1`.
    pub fn edges(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        let n = self.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(p, q)| p.dist(q)).sum()
    }

    /// Signed shoelace area, positive for counter-clockwise order.
    pub fn signed_area(&self) -> f64 {
        0.5 * self.edges().map(|(p, q)| p.cross(q)).sum::<f64>()
    }

    /// Image under `diag(sx, sy)`.
    pub fn scaled(&self, sx: f64, sy: f64) -> Result<Self> {
        Self::new(self.vertices.iter().map(|p| p.scale_xy(sx, sy)).collect())
    }

    /// Cosine of the internal angle at each vertex, from the two incident
    /// edge vectors. Self-intersecting polygons get no turning-number
    /// correction.
    pub fn internal_cosines(&self) -> Result<Vec<f64>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let p = self.vertices[i];
                let back = self.vertices[(i + n - 1) % n] - p;
                let fwd = self.vertices[(i + 1) % n] - p;
                let denom = back.norm() * fwd.norm();
                if denom == 0.0 {
                    return Err(Error::Degenerate(format!("zero-length edge at vertex {i}")));
                }
                Ok((back.dot(fwd) / denom).clamp(-1.0, 1.0))
            })
            .collect()
    }

    /// Smallest sum of squared vertex distances over the `2N` cyclic
    /// relabelings and reversals of `other`. `None` if sizes differ.
    pub fn dihedral_distance_sq(&self, other: &Polygon) -> Option<f64> {
        let n = self.len();
        if other.len() != n {
            return None;
        }
        let mut best = f64::INFINITY;
        for shift in 0..n {
            for reversed in [false, true] {
                let sum: f64 = (0..n)
                    .map(|i| {
                        let j = if reversed { (shift + n - i) % n } else { (shift + i) % n };
                        (self.vertices[i] - other.vertices[j]).norm_sq()
                    })
                    .sum();
                best = best.min(sum);
            }
        }
        Some(best)
    }
}

/// Side lengths, area and the radii of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleMetrics {
    /// `sides[i]` is opposite vertex `i`.
    pub sides: [f64; 3],
    pub area: f64,
    pub inradius: f64,
    pub circumradius: f64,
}

impl TriangleMetrics {
    pub fn of(tri: &Polygon) -> Result<Self> {
        let v = as_triangle(tri)?;
        let sides = [v[1].dist(v[2]), v[2].dist(v[0]), v[0].dist(v[1])];
        let area = 0.5 * (v[1] - v[0]).cross(v[2] - v[0]).abs();
        let perimeter: f64 = sides.iter().sum();
        if area <= 1e-14 * perimeter * perimeter {
            return Err(Error::Degenerate("collinear triangle".into()));
        }
        Ok(Self {
            sides,
            area,
            inradius: 2.0 * area / perimeter,
            circumradius: sides[0] * sides[1] * sides[2] / (4.0 * area),
        })
    }
}

pub(crate) fn as_triangle(poly: &Polygon) -> Result<[Vec2; 3]> {
    match poly.vertices() {
        [a, b, c] => Ok([*a, *b, *c]),
        v => Err(Error::InvalidParameter(format!(
            "expected a triangle, got {} vertices",
            v.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(pts: [(f64, f64); 3]) -> Polygon {
        Polygon::new(pts.iter().map(|&(x, y)| Vec2::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn rejects_short_and_coincident() {
        assert!(Polygon::new(vec![Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)]).is_err());
        assert!(Polygon::new(vec![Vec2::new(0.0, 0.0), Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn cosines_of_right_isoceles() {
        let c = tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).internal_cosines().unwrap();
        assert!(c[0].abs() < 1e-15);
        assert!((c[1] - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((c[2] - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn cosines_of_equilateral() {
        let s = 3f64.sqrt() / 2.0;
        for c in tri([(1.0, 0.0), (-0.5, s), (-0.5, -s)]).internal_cosines().unwrap() {
            assert!((c - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn metrics_of_3_4_5() {
        let m = TriangleMetrics::of(&tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)])).unwrap();
        assert_eq!(m.area, 6.0);
        assert!((m.inradius - 1.0).abs() < 1e-15);
        assert!((m.circumradius - 2.5).abs() < 1e-15);
    }

    #[test]
    fn collinear_is_degenerate() {
        assert!(TriangleMetrics::of(&tri([(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)])).is_err());
    }

    #[test]
    fn dihedral_matching_ignores_labels() {
        let p = tri([(0.0, 0.0), (2.0, 0.0), (0.0, 1.0)]);
        let q = tri([(0.0, 1.0), (2.0, 0.0), (0.0, 0.0)]);
        assert_eq!(p.dihedral_distance_sq(&q), Some(0.0));
        let r = tri([(0.0, 1.0), (0.0, 0.0), (2.0, 0.0)]);
        assert_eq!(p.dihedral_distance_sq(&r), Some(0.0));
    }
}
