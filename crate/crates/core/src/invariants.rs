//! Closed-form invariant targets and sweep statistics over a family.

use std::fmt;

use crate::conics::r_over_R_confocal;
use crate::error::{Error, Result};
use crate::families::{orthic_of, FamilyKind, FamilySpec};
use crate::geometry::{Polygon, TriangleMetrics};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Sum of cosines `1 + 2ab/(a+b)²` shared by the incircle family of
/// ellipse `(a, b)` and its confocal image.
pub fn cosine_sum_target(a: f64, b: f64) -> f64 {
    1.0 + 2.0 * a * b / ((a + b) * (a + b))
}

/// Product of cosines `ab/(2(a+b)²)` shared by the circumcircle family of
/// caustic `(a, b)` and its excentral image.
pub fn cosine_product_target(a: f64, b: f64) -> f64 {
    a * b / (2.0 * (a + b) * (a + b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremeKind {
    IncircleFamily,
    CircumcircleFamily,
}

/// Smallest and largest internal cosine over a family, ascending.
pub fn cosine_extremes(a: f64, b: f64, kind: ExtremeKind) -> (f64, f64) {
    let s = a + b;
    let (p, q) = match kind {
        ExtremeKind::IncircleFamily => (1.0 - 2.0 * a * a / (s * s), 1.0 - 2.0 * b * b / (s * s)),
        ExtremeKind::CircumcircleFamily => (b / s, a / s),
    };
    (p.min(q), p.max(q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    CosineSum,
    CosineProduct,
    Perimeter,
    OrthicInradius,
    OrthicCircumradius,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::CosineSum => "cosine_sum",
            Quantity::CosineProduct => "cosine_product",
            Quantity::Perimeter => "perimeter",
            Quantity::OrthicInradius => "orthic_inradius",
            Quantity::OrthicCircumradius => "orthic_circumradius",
        }
    }

    /// Tolerances for this quantity are relative to its magnitude.
    pub fn is_relative(self) -> bool {
        matches!(self, Quantity::Perimeter)
    }

    pub fn evaluate(self, poly: &Polygon) -> Result<f64> {
        match self {
            Quantity::CosineSum => Ok(poly.internal_cosines()?.iter().sum()),
            Quantity::CosineProduct => Ok(poly.internal_cosines()?.iter().product()),
            Quantity::Perimeter => Ok(poly.perimeter()),
            Quantity::OrthicInradius => Ok(TriangleMetrics::of(&orthic_of(poly)?)?.inradius),
            Quantity::OrthicCircumradius => Ok(TriangleMetrics::of(&orthic_of(poly)?)?.circumradius),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Quantities conserved by a family, the primary one first.
pub fn applicable_quantities(kind: FamilyKind) -> &'static [Quantity] {
    match kind {
        FamilyKind::Incircle => &[Quantity::CosineSum],
        FamilyKind::Confocal | FamilyKind::BilliardN => &[Quantity::CosineSum, Quantity::Perimeter],
        FamilyKind::Circumcircle => &[
            Quantity::CosineProduct,
            Quantity::OrthicInradius,
            Quantity::OrthicCircumradius,
        ],
        FamilyKind::Excentral => &[Quantity::CosineProduct],
    }
}

/// Closed-form value of `quantity` over `spec`, where one is known.
pub fn closed_form_target(spec: &FamilySpec, quantity: Quantity) -> Result<Option<f64>> {
    let (a, b) = (spec.a, spec.b);
    Ok(match (spec.kind, quantity) {
        (FamilyKind::Incircle | FamilyKind::Confocal, Quantity::CosineSum) => Some(cosine_sum_target(a, b)),
        (FamilyKind::Circumcircle | FamilyKind::Excentral, Quantity::CosineProduct) => {
            Some(cosine_product_target(a, b))
        }
        (FamilyKind::BilliardN, Quantity::CosineSum) => match (spec.n, spec.tau) {
            (3, 1) => {
                let table = spec.conic_pair()?.outer;
                Some(1.0 + r_over_R_confocal(table.a, table.b))
            }
            (4, 1) => Some(0.0),
            _ => None,
        },
        _ => None,
    })
}

/// Statistics of one quantity swept over a family.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub quantity: Quantity,
    pub samples: usize,
    pub mean: f64,
    /// Largest `|x - mean|` over the samples.
    pub max_abs_deviation: f64,
    pub min: f64,
    pub max: f64,
    pub closed_form_target: Option<f64>,
    /// Absolute tolerance the report was judged against.
    pub tolerance: f64,
    pub passed: bool,
}

impl InvariantReport {
    /// Summarize `values` and judge them against `tol` (scaled by `|mean|`
    /// for relative quantities).
    pub fn from_values(quantity: Quantity, values: &[f64], target: Option<f64>, tol: f64) -> Self {
        let mean = compensated_mean(values);
        let max_abs_deviation = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        let tolerance = if quantity.is_relative() {
            tol * mean.abs().max(f64::MIN_POSITIVE)
        } else {
            tol
        };
        let target_ok = target.is_none_or(|t| (mean - t).abs() <= tolerance);
        Self {
            quantity,
            samples: values.len(),
            mean,
            max_abs_deviation,
            min: values.iter().copied().fold(f64::INFINITY, f64::min),
            max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            closed_form_target: target,
            tolerance,
            passed: max_abs_deviation <= tolerance && target_ok && mean.is_finite(),
        }
    }
}

/// Neumaier-compensated mean.
pub fn compensated_mean(values: &[f64]) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    (sum + carry) / values.len() as f64
}

/// Sweep `quantity` over `n_samples` members spread uniformly over one period.
pub fn sweep_quantity(spec: &FamilySpec, quantity: Quantity, n_samples: usize, tol: f64) -> Result<InvariantReport> {
    if n_samples < 8 {
        return Err(Error::InvalidParameter(format!(
            "sweep needs at least 8 samples, got {n_samples}"
        )));
    }
    let values = spec
        .members(n_samples)?
        .iter()
        .map(|(_, p)| quantity.evaluate(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantReport::from_values(
        quantity,
        &values,
        closed_form_target(spec, quantity)?,
        tol,
    ))
}

/// Sweep the family's primary conserved quantity (cosine sum, or product
/// for the circumcircle and excentral families).
pub fn sweep(spec: &FamilySpec, n_samples: usize, tol: f64) -> Result<InvariantReport> {
    sweep_quantity(spec, applicable_quantities(spec.kind)[0], n_samples, tol)
}

/// Every applicable quantity of the family, primary first.
pub fn sweep_all(spec: &FamilySpec, n_samples: usize, tol: f64) -> Result<Vec<InvariantReport>> {
    applicable_quantities(spec.kind)
        .iter()
        .map(|&q| sweep_quantity(spec, q, n_samples, tol))
        .collect()
}

/// Observed smallest and largest internal cosine over a family, located on
/// a grid of `coarse` samples and polished by golden-section search.
pub fn observed_cosine_extremes(spec: &FamilySpec, coarse: usize) -> Result<(f64, f64)> {
    let period = spec.period()?;
    let h = period / coarse as f64;
    // Every vertex takes every position, so the first cosine alone covers
    // the whole range of values.
    let first_cos = |t: f64| -> Result<f64> { Ok(spec.member(t)?.internal_cosines()?[0]) };
    let grid = (0..coarse)
        .map(|i| {
            let t = i as f64 * h;
            Ok((t, first_cos(t)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let argmin = grid.iter().min_by(|x, y| x.1.total_cmp(&y.1)).unwrap().0;
    let argmax = grid.iter().max_by(|x, y| x.1.total_cmp(&y.1)).unwrap().0;
    let lo = golden_section_min(first_cos, argmin - h, argmin + h, 1e-12)?;
    let hi = golden_section_min(|t| first_cos(t).map(|c| -c), argmax - h, argmax + h, 1e-12)?;
    Ok((lo, -hi))
}

/// Minimum value of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_min<F>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut best = f1.min(f2);
    for _ in 0..200 {
        if hi - lo <= xtol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
        best = best.min(f1).min(f2);
    }
    Ok(best)
}
