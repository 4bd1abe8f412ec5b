//! Command-line front end: `verify`, `locus`, `family` and `caustic`.
//!
//! Exit codes: 0 all checks pass, 1 an invariant check failed, 2 bad
//! parameters, 3 I/O failure, 4 no admissible caustic.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::export::{write_locus_csv, write_locus_svg, LocusBlock};
use crate::families::{FamilyKind, FamilySpec, UniversalMeasure};
use crate::invariants::{sweep_all, InvariantReport, Quantity, DEFAULT_TOL};
use crate::loci::{sample_locus, LocusSpace};
use crate::oracle::{max_tangency_residual, reflection_residual, trace_closure, Ray};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT_FAILED: i32 = 1;
pub const EXIT_BAD_PARAMETERS: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NO_SOLUTION: i32 = 4;

/// Oracle closure and reflection checks on billiard families.
const ORBIT_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "plectrum",
    version,
    about = "Cosine invariants of Poncelet triangle and N-gon families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a family and check its conserved quantities.
    Verify(VerifyArgs),
    /// Export cosine or log-cosine loci as CSV (and optionally SVG).
    Locus(LocusArgs),
    /// Dump one member of a family.
    Family(FamilyArgs),
    /// Solve for the confocal caustic of (n, tau) billiard orbits.
    Caustic(CausticArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct FamilyParams {
    /// Outer semi-axes for incircle/confocal, caustic semi-axes otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
}

impl FamilyParams {
    fn spec(&self, kind: FamilyKind) -> Result<FamilySpec> {
        match kind {
            FamilyKind::BilliardN => FamilySpec::billiard(self.a, self.b, self.n, self.tau),
            _ => FamilySpec::triangles(kind, self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_kind)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: FamilyParams,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LocusKind {
    Cosine,
    Logcos,
}

#[derive(Debug, Clone, clap::Args)]
pub struct LocusArgs {
    #[arg(long, value_enum, default_value_t = LocusKind::Cosine)]
    pub kind: LocusKind,
    /// Defaults to incircle for cosine loci and circumcircle for log-cosine.
    #[arg(long, value_parser = parse_kind)]
    pub family: Option<FamilyKind>,
    /// Axis ratios a/b (b = 1), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ratios: Vec<f64>,
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    /// CSV destination; standard output if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: FamilyKind,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Family parameter (t, phi or u).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t: f64,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CausticArgs {
    /// Table semi-axes, a > b.
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
}

fn parse_kind(s: &str) -> std::result::Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse `args` (including the program name) and run, writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_PARAMETERS } else { EXIT_OK };
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args, out),
        Command::Locus(args) => cmd_locus(args, out),
        Command::Family(args) => cmd_family(args, out),
        Command::Caustic(args) => cmd_caustic(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        Error::NoCaustic { .. } => EXIT_NO_SOLUTION,
        _ => EXIT_BAD_PARAMETERS,
    }
}

fn fmt_target(t: Option<f64>) -> String {
    t.map_or_else(|| "-".to_string(), |v| format!("{v:.16}"))
}

pub fn write_report_table(out: &mut dyn Write, reports: &[InvariantReport]) -> Result<()> {
    writeln!(
        out,
        "{:<22} {:>22} {:>22} {:>10}  status",
        "quantity", "target", "mean", "max_dev"
    )?;
    for r in reports {
        writeln!(
            out,
            "{:<22} {:>22} {:>22.16} {:>10.3e}  {}",
            r.quantity.name(),
            fmt_target(r.closed_form_target),
            r.mean,
            r.max_abs_deviation,
            if r.passed { "pass" } else { "FAIL" }
        )?;
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    if args.samples < 8 || args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Error::InvalidParameter("need --samples >= 8 and --tol > 0".into()));
    }
    let spec = args.params.spec(args.family)?;
    let reports = sweep_all(&spec, args.samples, args.tol)?;
    writeln!(
        out,
        "family {} a={} b={} samples={}",
        spec.kind, spec.a, spec.b, args.samples
    )?;
    write_report_table(out, &reports)?;
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_INVARIANT_FAILED
    })
}

pub fn cmd_locus(args: &LocusArgs, out: &mut dyn Write) -> Result<i32> {
    let (space, default_family) = match args.kind {
        LocusKind::Cosine => (LocusSpace::Cosine, FamilyKind::Incircle),
        LocusKind::Logcos => (LocusSpace::LogCosine, FamilyKind::Circumcircle),
    };
    let family = args.family.unwrap_or(default_family);
    if args.ratios.is_empty() {
        return Err(Error::InvalidParameter("--ratios is empty".into()));
    }
    let blocks = args
        .ratios
        .iter()
        .map(|&ratio| {
            let spec = FamilySpec::triangles(family, ratio, 1.0)?;
            Ok(LocusBlock {
                family,
                a_over_b: ratio,
                samples: sample_locus(&spec, args.samples, space)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    match &args.out {
        Some(path) => write_locus_csv(BufWriter::new(File::create(path)?), &blocks)?,
        None => write_locus_csv(&mut *out, &blocks)?,
    }
    if let Some(path) = &args.svg {
        let mut w = BufWriter::new(File::create(path)?);
        write_locus_svg(&mut w, &blocks)?;
        w.flush()?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_family(args: &FamilyArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = args.params.spec(args.kind)?;
    let pair = spec.conic_pair()?;
    let poly = spec.member(args.t)?;
    let cos = poly.internal_cosines()?;
    writeln!(out, "family={}", spec.kind)?;
    writeln!(out, "a={}", spec.a)?;
    writeln!(out, "b={}", spec.b)?;
    writeln!(out, "param={}", args.t)?;
    writeln!(out, "outer={},{}", pair.outer.a, pair.outer.b)?;
    writeln!(out, "caustic={},{}", pair.caustic.a, pair.caustic.b)?;
    writeln!(out, "vertices={}", poly.len())?;
    for (i, v) in poly.vertices().iter().enumerate() {
        writeln!(out, "vertex.{}={},{}", i + 1, v.x, v.y)?;
    }
    for (i, c) in cos.iter().enumerate() {
        writeln!(out, "cos.{}={}", i + 1, c)?;
    }
    writeln!(out, "cos_sum={}", cos.iter().sum::<f64>())?;
    writeln!(out, "cos_product={}", cos.iter().product::<f64>())?;
    writeln!(out, "perimeter={}", poly.perimeter())?;
    writeln!(
        out,
        "tangency_residual={:e}",
        max_tangency_residual(&poly, &pair.caustic)?
    )?;
    if matches!(spec.kind, FamilyKind::Confocal | FamilyKind::BilliardN) {
        writeln!(
            out,
            "reflection_residual={:e}",
            reflection_residual(&poly, &pair.outer)?
        )?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_caustic(args: &CausticArgs, out: &mut dyn Write) -> Result<i32> {
    if args.samples < 8 {
        return Err(Error::InvalidParameter("need --samples >= 8".into()));
    }
    let spec = FamilySpec::billiard_in(args.a, args.b, args.n, args.tau)?;
    let um = UniversalMeasure::new(spec.a, spec.b, spec.n, spec.tau)?;
    let poly = um.polygon(0.0)?;
    let start = Ray::through(poly.vertex(0), poly.vertex(1))?;
    let (_, closure_error) = trace_closure(&start, &um.outer, spec.n)?;
    let reports = sweep_all(&spec, args.samples, DEFAULT_TOL)?;
    let sum = &reports[0];
    debug_assert_eq!(sum.quantity, Quantity::CosineSum);

    writeln!(out, "table={},{}", args.a, args.b)?;
    writeln!(out, "n={}", spec.n)?;
    writeln!(out, "tau={}", spec.tau)?;
    writeln!(out, "caustic_a={}", spec.a)?;
    writeln!(out, "caustic_b={}", spec.b)?;
    writeln!(out, "closure_error={closure_error:e}")?;
    writeln!(out, "cos_sum={}", sum.mean)?;
    writeln!(out, "cos_sum_max_dev={:e}", sum.max_abs_deviation)?;
    writeln!(out, "perimeter={}", reports[1].mean)?;
    let ok = closure_error < ORBIT_TOL && reports.iter().all(|r| r.passed);
    Ok(if ok { EXIT_OK } else { EXIT_INVARIANT_FAILED })
}
