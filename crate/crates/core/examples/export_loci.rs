//! Write the plectrum curves to CSV and SVG.
//!
//! ```text
//! cargo run --example export_loci -- /tmp/plectrum
//! ```

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use plectrum::export::{write_locus_csv, write_locus_svg, LocusBlock};
use plectrum::families::{FamilyKind, FamilySpec};
use plectrum::loci::{sample_locus, LocusSpace};

fn main() -> plectrum::Result<()> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("plectrum"));
    fs::create_dir_all(&dir)?;

    let mut blocks = Vec::new();
    for a in [3.0, 2.0, 1.5, 1.1] {
        let spec = FamilySpec::triangles(FamilyKind::Incircle, a, 1.0)?;
        blocks.push(LocusBlock {
            family: spec.kind,
            a_over_b: a,
            samples: sample_locus(&spec, 720, LocusSpace::Cosine)?,
        });
    }
    let csv = dir.join("picks.csv");
    let svg = dir.join("picks.svg");
    write_locus_csv(BufWriter::new(File::create(&csv)?), &blocks)?;
    write_locus_svg(BufWriter::new(File::create(&svg)?), &blocks)?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
