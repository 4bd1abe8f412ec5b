//! CSV and SVG writers for sampled loci.
//!
//! CSV columns:
//! `family,a_over_b,param,c1,c2,c3,u,v,residual_cubic,residual_sphere,residual_titeica`.
//! Numbers carry 17 significant digits; inapplicable residuals are empty.
//! In log-cosine exports `c1..c3` hold the log-cosines and `u, v` their
//! projection.

use std::io::Write;

use crate::error::Result;
use crate::families::FamilyKind;
use crate::loci::LocusSample;

pub const CSV_HEADER: [&str; 11] = [
    "family",
    "a_over_b",
    "param",
    "c1",
    "c2",
    "c3",
    "u",
    "v",
    "residual_cubic",
    "residual_sphere",
    "residual_titeica",
];

/// One sampled curve: a family at one axis ratio.
#[derive(Debug, Clone)]
pub struct LocusBlock {
    pub family: FamilyKind,
    pub a_over_b: f64,
    pub samples: Vec<LocusSample>,
}

/// 17 significant digits, round-trip exact.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

pub fn write_locus_csv<W: Write>(out: W, blocks: &[LocusBlock]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for block in blocks {
        for s in &block.samples {
            w.write_record([
                block.family.name().to_string(),
                fmt_num(block.a_over_b),
                fmt_num(s.param),
                fmt_num(s.coords[0]),
                fmt_num(s.coords[1]),
                fmt_num(s.coords[2]),
                fmt_num(s.uv.0),
                fmt_num(s.uv.1),
                fmt_opt(s.residuals.cubic),
                fmt_opt(s.residuals.sphere),
                fmt_opt(s.residuals.titeica),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Static SVG with one closed stroke-only path per block, drawn in the
/// `(u, v)` plane with `v` pointing up. The view box fits the data with a
/// 5% margin.
pub fn write_locus_svg<W: Write>(mut out: W, blocks: &[LocusBlock]) -> Result<()> {
    let pts = || blocks.iter().flat_map(|b| b.samples.iter().map(|s| s.uv));
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (u, v) in pts() {
        x0 = x0.min(u);
        x1 = x1.max(u);
        y0 = y0.min(-v);
        y1 = y1.max(-v);
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    // a point locus still needs a visible box
    let span = (x1 - x0).max(y1 - y0).max(1e-3);
    let margin = 0.05 * span;
    let (vx, vy) = (x0 - margin, y0 - margin);
    let (vw, vh) = ((x1 - x0).max(1e-3) + 2.0 * margin, (y1 - y0).max(1e-3) + 2.0 * margin);
    let stroke = 0.004 * span;

    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.9} {vy:.9} {vw:.9} {vh:.9}">"#
    )?;
    for b in blocks {
        let mut d = String::new();
        for (i, s) in b.samples.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{:.9} {:.9} ", s.uv.0, -s.uv.1));
        }
        d.push('Z');
        writeln!(
            out,
            r#"  <path data-family="{}" data-a-over-b="{}" fill="none" stroke="black" stroke-width="{stroke:.9}" d="{d}"/>"#,
            b.family.name(),
            b.a_over_b
        )?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}
