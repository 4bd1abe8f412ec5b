//! Cosine space and log-cosine space.
//!
//! A triangle's internal cosines form a point `(c1, c2, c3)`. Sweeping a
//! triangle family traces a closed curve:
//!
//! * incircle and confocal families keep `c1 + c2 + c3 = k`, so the curve
//!   is planar; projected onto the plane basis it is an equilateral cubic,
//!   see [`cubic_residual`];
//! * circumcircle and excentral families keep `c1 c2 c3 = k'` and
//!   `c1² + c2² + c3² = 1 - 2k'`, a sphere meeting a Titeica surface, see
//!   [`sphere_titeica_residuals`]. Their log-cosines are again planar.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilySpec};
use crate::geometry::Polygon;
use crate::invariants::{closed_form_target, golden_section_min, Quantity};

/// Internal-angle cosines of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineTriple {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl CosineTriple {
    /// Each coordinate must lie in `[-1, 1]`.
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        for c in [c1, c2, c3] {
            if !(-1.0..=1.0).contains(&c) {
                return Err(Error::InvalidParameter(format!("cosine {c} outside [-1, 1]")));
            }
        }
        Ok(Self { c1, c2, c3 })
    }

    /// Cosines of a triangle, checking the angles add up to π.
    pub fn of_triangle(tri: &Polygon) -> Result<Self> {
        let c = tri.internal_cosines()?;
        if c.len() != 3 {
            return Err(Error::InvalidParameter(format!(
                "expected a triangle, got {} vertices",
                c.len()
            )));
        }
        let angle_sum: f64 = c.iter().map(|x| x.acos()).sum();
        if (angle_sum - PI).abs() > 1e-9 {
            return Err(Error::Degenerate(format!("angles sum to {angle_sum}, not π")));
        }
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn sum(self) -> f64 {
        self.c1 + self.c2 + self.c3
    }

    pub fn product(self) -> f64 {
        self.c1 * self.c2 * self.c3
    }
}

/// Orthonormal basis of the plane perpendicular to `(1, 1, 1)`:
/// `u = (0,0,1) × (1,1,1)` and `v = (1,1,1) × u`, both normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneBasis {
    pub u_hat: [f64; 3],
    pub v_hat: [f64; 3],
}

impl PlaneBasis {
    pub const STANDARD: PlaneBasis = PlaneBasis {
        u_hat: [-FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0],
        v_hat: [-INV_SQRT_6, -INV_SQRT_6, 2.0 * INV_SQRT_6],
    };

    pub fn project(&self, p: [f64; 3]) -> (f64, f64) {
        (dot3(p, self.u_hat), dot3(p, self.v_hat))
    }
}

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
const INV_SQRT_6: f64 = 0.408_248_290_463_863;

fn dot3(p: [f64; 3], q: [f64; 3]) -> f64 {
    p[0] * q[0] + p[1] * q[1] + p[2] * q[2]
}

/// Coordinates of a triple in the standard plane basis. The component
/// along `(1, 1, 1)` is dropped.
pub fn plane_project(triple: &CosineTriple) -> (f64, f64) {
    PlaneBasis::STANDARD.project(triple.to_array())
}

/// Equilateral cubic carrying the projected cosine triples of the incircle
/// and confocal families with cosine sum `k`:
/// `-3√6 (3u² - v²) v - 9(k - 3)(u² + v²) + (2k - 3)(k + 3)²`.
///
/// The odd term's sign matches the orientation of `v` in
/// [`PlaneBasis::STANDARD`].
pub fn cubic_residual(u: f64, v: f64, k: f64) -> f64 {
    let sqrt6 = 6f64.sqrt();
    -3.0 * sqrt6 * (3.0 * u * u - v * v) * v - 9.0 * (k - 3.0) * (u * u + v * v)
        + (2.0 * k - 3.0) * (k + 3.0) * (k + 3.0)
}

/// Implicit relation between two cosines of a triangle whose cosines sum to `k`.
pub fn pick_residual(c1: f64, c2: f64, k: f64) -> f64 {
    2.0 * c1 * c2 * (c1 + c2) - 2.0 * (c1 * c1 + c2 * c2) - 2.0 * (k + 1.0) * c1 * c2 + 2.0 * k * (c1 + c2) + 1.0
        - k * k
}

/// `(|c|² + 2k' - 1, c1 c2 c3 - k')`.
pub fn sphere_titeica_residuals(triple: &CosineTriple, k_prime: f64) -> (f64, f64) {
    let c = triple.to_array();
    (dot3(c, c) + 2.0 * k_prime - 1.0, triple.product() - k_prime)
}

/// `2 c1 c2 c3 + |c|² - 1`, the surface swept by all sphere/Titeica curves.
pub fn union_residual(triple: &CosineTriple) -> f64 {
    let c = triple.to_array();
    2.0 * triple.product() + dot3(c, c) - 1.0
}

/// Componentwise natural log; needs an acute triangle.
pub fn log_cosine(triple: &CosineTriple) -> Result<[f64; 3]> {
    let c = triple.to_array();
    if c.iter().any(|&x| x <= 0.0) {
        return Err(Error::NonPositiveCosine(c));
    }
    Ok(c.map(f64::ln))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusSpace {
    Cosine,
    LogCosine,
}

/// Residuals attached to one locus sample; `None` where inapplicable.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LocusResiduals {
    pub cubic: Option<f64>,
    pub pick: Option<f64>,
    pub sphere: Option<f64>,
    pub titeica: Option<f64>,
    pub union: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusSample {
    pub param: f64,
    pub triple: CosineTriple,
    /// The point in the requested space: cosines, or their logs.
    pub coords: [f64; 3],
    /// `coords` projected onto [`PlaneBasis::STANDARD`].
    pub uv: (f64, f64),
    pub residuals: LocusResiduals,
}

/// Which invariant curve a family's triples should lie on.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Constraint {
    Sum(f64),
    Product(f64),
}

fn constraint(spec: &FamilySpec) -> Result<Constraint> {
    if spec.vertex_count() != 3 {
        return Err(Error::InvalidParameter(format!(
            "cosine loci need triangles, family has {} vertices",
            spec.vertex_count()
        )));
    }
    let quantity = if spec.kind.conserves_product() {
        Quantity::CosineProduct
    } else {
        Quantity::CosineSum
    };
    let target = closed_form_target(spec, quantity)?.expect("every triangle family has a closed-form target");
    Ok(match quantity {
        Quantity::CosineProduct => Constraint::Product(target),
        _ => Constraint::Sum(target),
    })
}

fn residuals_for(triple: &CosineTriple, constraint: Constraint) -> LocusResiduals {
    match constraint {
        Constraint::Sum(k) => {
            let (u, v) = plane_project(triple);
            LocusResiduals {
                cubic: Some(cubic_residual(u, v, k)),
                pick: Some(pick_residual(triple.c1, triple.c2, k)),
                ..Default::default()
            }
        }
        Constraint::Product(kp) => {
            let (sphere, titeica) = sphere_titeica_residuals(triple, kp);
            LocusResiduals {
                sphere: Some(sphere),
                titeica: Some(titeica),
                union: Some(union_residual(triple)),
                ..Default::default()
            }
        }
    }
}

/// `n_samples` points of the family's locus, ordered by parameter over one
/// closed-open period.
pub fn sample_locus(spec: &FamilySpec, n_samples: usize, space: LocusSpace) -> Result<Vec<LocusSample>> {
    if n_samples < 3 {
        return Err(Error::InvalidParameter(format!(
            "locus needs at least 3 samples, got {n_samples}"
        )));
    }
    if space == LocusSpace::LogCosine && !spec.kind.conserves_product() {
        return Err(Error::InvalidParameter(format!(
            "log-cosine loci need an acute family (circumcircle or excentral), got {}",
            spec.kind
        )));
    }
    let constraint = constraint(spec)?;
    spec.members(n_samples)?
        .into_iter()
        .map(|(param, tri)| {
            let triple = CosineTriple::of_triangle(&tri)?;
            let coords = match space {
                LocusSpace::Cosine => triple.to_array(),
                LocusSpace::LogCosine => log_cosine(&triple)?,
            };
            Ok(LocusSample {
                param,
                triple,
                coords,
                uv: PlaneBasis::STANDARD.project(coords),
                residuals: residuals_for(&triple, constraint),
            })
        })
        .collect()
}

/// Cosine triple of a triangle family member as a point in `R³`.
pub fn triple_at(spec: &FamilySpec, param: f64) -> Result<[f64; 3]> {
    Ok(CosineTriple::of_triangle(&spec.member(param)?)?.to_array())
}

/// Projected `(u, v)` of a family member's cosine triple.
pub fn projected_at(spec: &FamilySpec, param: f64) -> Result<[f64; 2]> {
    let (u, v) = PlaneBasis::STANDARD.project(triple_at(spec, param)?);
    Ok([u, v])
}

fn dist_sq<const D: usize>(p: &[f64; D], q: &[f64; D]) -> f64 {
    p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Distance from each sample of curve `from` to curve `to`, maximized.
/// `to` is sampled on the same grid size. The nearest point of `to` lies in
/// a cell next to some sample no farther than the nearest sample plus the
/// largest sample gap; each such sample that is also a local minimum of
/// the sampled distance is polished by golden-section search over its two
/// neighbouring cells. Checking only the single
/// nearest sample is not enough where the curve passes a point twice.
fn directed_hausdorff<const D: usize, F, G>(
    from: &F,
    from_period: f64,
    to: &G,
    to_period: f64,
    samples: usize,
) -> Result<f64>
where
    F: Fn(f64) -> Result<[f64; D]>,
    G: Fn(f64) -> Result<[f64; D]>,
{
    let h_to = to_period / samples as f64;
    let from_pts = (0..samples)
        .map(|i| from(from_period * i as f64 / samples as f64))
        .collect::<Result<Vec<_>>>()?;
    let to_pts = (0..samples).map(|i| to(h_to * i as f64)).collect::<Result<Vec<_>>>()?;
    let max_gap = (0..samples)
        .map(|j| dist_sq(&to_pts[j], &to_pts[(j + 1) % samples]).sqrt())
        .fold(0.0, f64::max);

    let mut worst = 0.0_f64;
    let mut dists = vec![0.0; samples];
    for p in &from_pts {
        for (d, q) in dists.iter_mut().zip(&to_pts) {
            *d = dist_sq(p, q).sqrt();
        }
        let nearest = dists.iter().copied().fold(f64::INFINITY, f64::min);
        let mut best = nearest;
        for (j, &d) in dists.iter().enumerate() {
            let prev = dists[(j + samples - 1) % samples];
            let next = dists[(j + 1) % samples];
            if d > nearest + max_gap || d > prev || d > next {
                continue;
            }
            let t = h_to * j as f64;
            let d2 = golden_section_min(|s| Ok(dist_sq(p, &to(s)?)), t - h_to, t + h_to, 1e-14 * to_period)?;
            best = best.min(d2.max(0.0).sqrt());
        }
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Symmetric Hausdorff distance between two closed parametric curves, each
/// given over one period.
pub fn curve_hausdorff<const D: usize, F, G>(f: F, f_period: f64, g: G, g_period: f64, samples: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<[f64; D]>,
    G: Fn(f64) -> Result<[f64; D]>,
{
    let ab = directed_hausdorff(&f, f_period, &g, g_period, samples)?;
    let ba = directed_hausdorff(&g, g_period, &f, f_period, samples)?;
    Ok(ab.max(ba))
}

/// Hausdorff distance between the cosine loci of two triangle families:
/// in the projection plane for sum-conserving families, in `R³` otherwise.
pub fn locus_hausdorff(first: &FamilySpec, second: &FamilySpec, samples: usize) -> Result<f64> {
    let (p1, p2) = (first.period()?, second.period()?);
    if first.kind.conserves_product() {
        curve_hausdorff(|t| triple_at(first, t), p1, |t| triple_at(second, t), p2, samples)
    } else {
        curve_hausdorff(|t| projected_at(first, t), p1, |t| projected_at(second, t), p2, samples)
    }
}

/// True for kinds whose cosine triples lie on the plectrum cubic.
pub fn is_plectrum_family(kind: FamilyKind) -> bool {
    matches!(kind, FamilyKind::Incircle | FamilyKind::Confocal)
}
