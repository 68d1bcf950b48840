//! Command-line front end: generate spectra, apply bounds, run the full
//! verification matrix, print the sphere-bound polynomial coefficients.
//!
//! Exit codes: 0 success / all inequalities hold; 1 usage error; 2 rule or
//! convergence error; 3 a violation was detected.

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::ReportFormat;
use polybound::bounds::{self, BoundError, Rule};
use polybound::solver::{
    disk_clamped_plate_spectrum, interval_buckling_spectrum, interval_polyharmonic_spectrum,
    rectangle_spectrum, sphere_closed_spectrum, SolverError,
};
use polybound::spectrum::{read_spectrum, write_spectrum, ProblemKind, Spectrum, SpectrumError};
use polybound::spherepoly::f_poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RULE_ERROR: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "polybound",
    about = "Universal eigenvalue inequalities for clamped polyharmonic and buckling problems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a reference spectrum and write it to a file.
    Spectrum(SpectrumArgs),
    /// Apply one inequality to a spectrum file.
    Bounds(BoundsArgs),
    /// Run every applicable inequality on one or more spectra.
    Verify(VerifyArgs),
    /// Print the coefficients of the sphere-bound polynomial F_l.
    Fpoly(FpolyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Interval,
    Rectangle,
    Disk,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Dirichlet,
    Buckling,
    GeneralizedBuckling,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    domain: DomainArg,
    #[arg(long, value_enum, default_value = "dirichlet")]
    kind: KindArg,
    /// Operator order; defaults to 2 for disk/buckling problems, else 1.
    #[arg(long)]
    l: Option<u32>,
    /// Ambient dimension; required for --domain sphere, inferred otherwise.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 6)]
    count: usize,
    /// Galerkin basis size (per axis on rectangles); defaults to 30 + 10l.
    #[arg(long)]
    basis: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    #[arg(long, default_value_t = 1.0)]
    height: f64,
    /// Largest angular mode scanned for disk spectra.
    #[arg(long, default_value_t = 8)]
    m_max: u32,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[arg(long)]
    rule: String,
    /// Index to apply the rule at; omit to sweep every valid index.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Spectrum files to verify (repeatable).
    #[arg(long = "spectrum")]
    spectra: Vec<PathBuf>,
    /// Generate and verify the pinned desk-scale battery instead.
    #[arg(long, conflicts_with = "spectra")]
    builtin_suite: bool,
    /// Write the full report as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the report as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FpolyFormat {
    Fractions,
    Decimal,
}

#[derive(Args)]
struct FpolyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, value_enum, default_value = "fractions")]
    format: FpolyFormat,
}

/// Parses and runs a full command line (first element is the program name);
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Fpoly(args) => cmd_fpoly(args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn solver_exit(err: &SolverError) -> i32 {
    match err {
        SolverError::BadArgument(_) => EXIT_USAGE,
        _ => EXIT_RULE_ERROR,
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> i32 {
    let default_l = match (args.domain, args.kind) {
        (DomainArg::Disk, _) => 2,
        (_, KindArg::Buckling) => 2,
        (_, KindArg::GeneralizedBuckling) => 2,
        _ => 1,
    };
    let l = args.l.unwrap_or(default_l);
    let basis = args.basis.unwrap_or(30 + 10 * l as usize);

    let forced_n = match args.domain {
        DomainArg::Interval => Some(1),
        DomainArg::Rectangle | DomainArg::Disk => Some(2),
        DomainArg::Sphere => None,
    };
    if let (Some(given), Some(forced)) = (args.n, forced_n) {
        if given != forced {
            return usage_error(&format!(
                "--domain {:?} forces n = {forced}, got --n {given}",
                args.domain
            ));
        }
    }

    let result: Result<Spectrum, SolverError> = match (args.domain, args.kind) {
        (DomainArg::Interval, KindArg::Dirichlet) => {
            interval_polyharmonic_spectrum(l, basis, args.count)
        }
        (DomainArg::Interval, KindArg::Buckling) => {
            if l != 2 {
                return usage_error("the classical buckling problem has l = 2; use --kind generalized-buckling for higher order");
            }
            interval_buckling_spectrum(2, basis, args.count)
        }
        (DomainArg::Interval, KindArg::GeneralizedBuckling) => {
            if l < 2 {
                return usage_error("generalized buckling requires --l >= 2");
            }
            interval_buckling_spectrum(l, basis, args.count).map(|mut s| {
                // l = 2 coincides with the classical problem; honor the
                // requested labeling.
                s.spec.kind = ProblemKind::GeneralizedBuckling;
                s
            })
        }
        (DomainArg::Rectangle, KindArg::Dirichlet) => {
            rectangle_spectrum(l, args.width, args.height, basis, args.count)
        }
        (DomainArg::Disk, KindArg::Dirichlet) => {
            if l != 2 {
                return usage_error("the disk solver covers the clamped plate only (l = 2)");
            }
            disk_clamped_plate_spectrum(args.count, args.m_max)
        }
        (DomainArg::Sphere, KindArg::Dirichlet) => {
            let Some(n) = args.n else {
                return usage_error("--domain sphere requires --n");
            };
            if n < 1 || l < 1 || args.count < 1 {
                return usage_error("sphere spectra need n >= 1, l >= 1, count >= 1");
            }
            Ok(sphere_closed_spectrum(n, l, args.count))
        }
        (domain, kind) => {
            return usage_error(&format!(
                "unsupported combination: --domain {domain:?} with --kind {kind:?}"
            ));
        }
    };

    let spectrum = match result {
        Ok(s) => s,
        Err(err) => {
            eprintln!("error: {err}");
            return solver_exit(&err);
        }
    };
    match write_spectrum(&spectrum, &args.out) {
        Ok(()) => {
            println!(
                "wrote {} eigenvalues ({}, l = {}, n = {}, {}) to {}",
                spectrum.len(),
                spectrum.spec.kind.as_str(),
                spectrum.spec.l,
                spectrum.spec.n,
                spectrum.spec.domain,
                args.out.display()
            );
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_RULE_ERROR
        }
    }
}

fn load_spectrum(path: &PathBuf) -> Result<Spectrum, i32> {
    read_spectrum(path).map_err(|err| {
        eprintln!("error: {err}");
        match err {
            SpectrumError::Io { .. } => EXIT_USAGE,
            SpectrumError::Parse { .. } | SpectrumError::Validation { .. } => EXIT_RULE_ERROR,
        }
    })
}

fn cmd_bounds(args: BoundsArgs) -> i32 {
    let rule: Rule = match args.rule.parse() {
        Ok(rule) => rule,
        Err(message) => return usage_error(&message),
    };
    let spectrum = match load_spectrum(&args.spectrum) {
        Ok(s) => s,
        Err(code) => return code,
    };

    let ks: Vec<Option<usize>> = if rule.uses_k() {
        match args.k {
            Some(k) => vec![Some(k)],
            // Sweep every index with a known next eigenvalue.
            None => (1..spectrum.len()).map(Some).collect(),
        }
    } else {
        if args.k.is_some() {
            return usage_error(&format!("rule `{}` does not take --k", rule.id()));
        }
        vec![None]
    };
    if ks.is_empty() {
        return usage_error("spectrum too short: no index k with a known lambda_(k+1)");
    }

    if args.format == ReportFormat::Csv {
        println!("{}", output::csv_header());
    }
    let mut any_violation = false;
    let mut any_error = false;
    for k in ks {
        match bounds::evaluate(rule, &spectrum, k) {
            Ok(report) => {
                println!("{}", output::render(&report, args.format));
                any_violation |= !report.holds;
            }
            Err(err @ BoundError::KindMismatch { .. })
            | Err(err @ BoundError::MissingIndex { .. }) => {
                return usage_error(&err.to_string());
            }
            Err(err) => {
                eprintln!("error: {err}");
                any_error = true;
            }
        }
    }
    if any_violation {
        EXIT_VIOLATION
    } else if any_error {
        EXIT_RULE_ERROR
    } else {
        EXIT_OK
    }
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let spectra: Vec<(String, Spectrum)> = if args.builtin_suite {
        match verify::builtin_suite() {
            Ok(s) => s,
            Err(err) => {
                eprintln!("error: {err}");
                return solver_exit(&err);
            }
        }
    } else {
        if args.spectra.is_empty() {
            return usage_error("pass --spectrum FILE (repeatable) or --builtin-suite");
        }
        let mut loaded: Vec<(String, Spectrum)> = Vec::new();
        for path in &args.spectra {
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            // Same-stem files from different directories must stay distinct
            // in the matrix.
            let id = if loaded.iter().any(|(existing, _)| *existing == stem) {
                path.display().to_string()
            } else {
                stem
            };
            match load_spectrum(path) {
                Ok(s) => loaded.push((id, s)),
                Err(code) => return code,
            }
        }
        loaded
    };

    let matrix = verify::build_matrix(&spectra);
    for entry in &matrix.entries {
        let at = entry.k.map(|k| format!(" k={k}")).unwrap_or_default();
        if let Some(report) = &entry.report {
            if !report.holds {
                println!(
                    "FAIL {} {}{at} slack={:.3e}",
                    entry.spectrum_id, entry.rule, report.slack
                );
            }
        } else if let Some(error) = &entry.error {
            println!("ERROR {} {}{at}: {error}", entry.spectrum_id, entry.rule);
        }
    }
    println!(
        "verify: {} pass, {} fail, {} error over {} spectra",
        matrix.summary.pass,
        matrix.summary.fail,
        matrix.summary.error,
        matrix.spectra.len()
    );

    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&matrix).expect("matrix serializes");
        if let Err(err) = std::fs::write(path, json + "\n") {
            eprintln!("error: cannot write {}: {err}", path.display());
            return EXIT_RULE_ERROR;
        }
    }
    if let Some(path) = &args.csv {
        if let Err(err) = std::fs::write(path, matrix.to_csv()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return EXIT_RULE_ERROR;
        }
    }
    matrix.exit_code()
}

fn cmd_fpoly(args: FpolyArgs) -> i32 {
    if args.n < 1 || args.l < 1 {
        return usage_error("fpoly requires --n >= 1 and --l >= 1");
    }
    let poly = f_poly(args.n, args.l);
    match args.format {
        FpolyFormat::Fractions => println!("{poly}"),
        FpolyFormat::Decimal => {
            let parts: Vec<String> = poly
                .coeffs_f64()
                .iter()
                .rev()
                .map(|c| format!("{c}"))
                .collect();
            println!("{}", parts.join(" "));
        }
    }
    EXIT_OK
}
