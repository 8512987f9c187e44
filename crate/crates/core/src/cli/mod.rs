//! Command-line front end.
//!
//! Exit status: 0 when the check passes, 1 when it fails, 2 on unreadable or
//! mis-shaped input (and on usage errors, via clap).

mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::applications::{barycentric, ApplicationError};
use crate::config::{Configuration, Point};
use crate::format::{self, FormatError};
use crate::identity::{coefficients, delta_determinant, delta_expanded, residual, signed_volume};
use crate::identity::{TolerancePolicy, ToleranceUsed, DEFAULT_FLOAT_TOLERANCE};
use crate::scalar::{Rational, Scalar};
use crate::verification::suite::{run_property_suite, SuiteConfig};

pub use report::{BarycentricReport, DeltaReport, ReportValue, SuiteReport, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "simplex-sum",
    version,
    about = "Signed simplex volume identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    fn name(self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Float => "float",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the identity on n+2 points and report coefficients and residual.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        backend: Backend,
        /// Relative tolerance for the float backend.
        #[arg(long, default_value_t = DEFAULT_FLOAT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Barycentric coordinates of a point with respect to an n-simplex.
    Barycentric {
        #[arg(long)]
        simplex: PathBuf,
        /// Comma-separated coordinates, e.g. `1/4,0.5`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "exact")]
        backend: Backend,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a single coefficient both ways and compare.
    Delta {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value = "exact")]
        backend: Backend,
        #[arg(long, default_value_t = DEFAULT_FLOAT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized property suite.
    Suite {
        /// Dimension range `a..b` (inclusive) or a single dimension.
        #[arg(long, value_parser = parse_dims, default_value = "1..6")]
        dims: (usize, usize),
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| format!("bad dimension `{lo}`"))?;
    let hi: usize = hi.parse().map_err(|_| format!("bad dimension `{hi}`"))?;
    if lo == 0 || lo > hi {
        return Err(format!(
            "dimension range {lo}..{hi} must satisfy 1 <= a <= b"
        ));
    }
    Ok((lo, hi))
}

/// Error raised while running a command, mapped onto an exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(FormatError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(FormatError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        if e.is_dimension_mismatch() {
            Self::DimensionMismatch(e)
        } else {
            Self::Parse(e)
        }
    }
}

/// Result of a command: the JSON report and the exit status it implies.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (mut report, exit_code, out) = match &cli.command {
        Command::Verify {
            input,
            backend,
            tolerance,
            out,
        } => {
            let cfg = format::load(input)?.into_configuration()?;
            let (report, passed) = match backend {
                Backend::Exact => verify_report(&cfg, TolerancePolicy::ExactZero, *backend)?,
                Backend::Float => {
                    let cfg: Configuration<f64> = to_float(&cfg)?;
                    verify_report(&cfg, TolerancePolicy::Relative(*tolerance), *backend)?
                }
            };
            (report, pass_code(passed), out.clone())
        }
        Command::Barycentric {
            simplex,
            point,
            backend,
            out,
        } => {
            let simplex = format::load(simplex)?.into_simplex()?;
            let p = format::parse_coords(point)?;
            let (report, passed) = match backend {
                Backend::Exact => barycentric_report(&simplex, &p, *backend)?,
                Backend::Float => {
                    let simplex = simplex
                        .iter()
                        .map(|q| q.convert::<f64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    let p = p
                        .convert::<f64>()
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    barycentric_report(&simplex, &p, *backend)?
                }
            };
            (report, pass_code(passed), out.clone())
        }
        Command::Delta {
            input,
            index,
            backend,
            tolerance,
            out,
        } => {
            let cfg = format::load(input)?.into_configuration()?;
            let (report, passed) = match backend {
                Backend::Exact => delta_report(&cfg, *index, *tolerance, *backend)?,
                Backend::Float => delta_report(&to_float(&cfg)?, *index, *tolerance, *backend)?,
            };
            (report, pass_code(passed), out.clone())
        }
        Command::Suite {
            dims,
            trials,
            seed,
            out,
        } => {
            let config = SuiteConfig::new(dims.0..=dims.1, *trials as usize, *seed);
            let trial_report =
                run_property_suite(&config).map_err(|e| CliError::Input(e.to_string()))?;
            let passed = trial_report.passed();
            let report = SuiteReport::new(trial_report, 0.0);
            (to_value(&report), pass_code(passed), Some(out.clone()))
        }
    };
    let runtime_ms = started.elapsed().as_secs_f64() * 1e3;
    if let Some(obj) = report.as_object_mut() {
        obj.insert("runtime_ms".into(), Value::from(runtime_ms));
    }
    if let Some(path) = out {
        write_report(&path, &report)?;
    }
    Ok(Outcome { report, exit_code })
}

fn pass_code(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn to_value<S: serde::Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("reports serialize")
}

fn to_float(cfg: &Configuration<Rational>) -> Result<Configuration<f64>, CliError> {
    cfg.convert().map_err(|e| CliError::Input(e.to_string()))
}

fn write_report(path: &Path, report: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn verify_report<T: Scalar + ReportValue>(
    cfg: &Configuration<T>,
    policy: TolerancePolicy,
    backend: Backend,
) -> Result<(Value, bool), CliError> {
    let coeffs = coefficients(cfg).map_err(input_error)?;
    let r = residual(cfg, policy).map_err(input_error)?;
    let tolerance = match &r.tolerance_used {
        ToleranceUsed::ExactZero => Value::from("exact"),
        ToleranceUsed::Relative { tolerance, .. } => Value::from(*tolerance),
    };
    let report = VerifyReport {
        command: "verify",
        backend: backend.name(),
        dimension: cfg.dimension(),
        coefficients: coeffs.signed.iter().map(ReportValue::to_report).collect(),
        deltas: coeffs.deltas.iter().map(ReportValue::to_report).collect(),
        signs: coeffs.signs.clone(),
        residual_vector: r
            .vector
            .coords()
            .iter()
            .map(ReportValue::to_report)
            .collect(),
        residual_scalar: r.scalar.to_report(),
        verdict: if r.verdict.passed() { "pass" } else { "fail" },
        tolerance,
        relative_residual: (!T::EXACT).then(|| r.relative_error()),
    };
    Ok((to_value(&report), r.verdict.passed()))
}

fn barycentric_report<T: Scalar + ReportValue>(
    simplex: &[Point<T>],
    p: &Point<T>,
    backend: Backend,
) -> Result<(Value, bool), CliError> {
    let mut report = BarycentricReport {
        command: "barycentric",
        backend: backend.name(),
        point: p.coords().iter().map(ReportValue::to_report).collect(),
        lambdas: None,
        sum: None,
        reconstruction: None,
        reconstruction_matches: None,
        verdict: "fail",
        error: None,
        witness: None,
    };
    match barycentric(simplex, p) {
        Ok(coords) => {
            let rebuilt = coords.reconstruct(simplex);
            let matches = if T::EXACT {
                rebuilt == *p && coords.sum().is_one()
            } else {
                let scale = p.max_abs().to_f64().max(1.0);
                rebuilt
                    .coords()
                    .iter()
                    .zip(p.coords())
                    .all(|(a, b)| (a.to_f64() - b.to_f64()).abs() <= 1e-9 * scale)
            };
            report.lambdas = Some(coords.lambdas.iter().map(ReportValue::to_report).collect());
            report.sum = Some(coords.sum().to_report());
            report.reconstruction = Some(
                rebuilt
                    .coords()
                    .iter()
                    .map(ReportValue::to_report)
                    .collect(),
            );
            report.reconstruction_matches = Some(matches);
            report.verdict = if matches { "pass" } else { "fail" };
            Ok((to_value(&report), matches))
        }
        Err(ApplicationError::DegenerateSimplex { witness }) => {
            report.error = Some("DegenerateSimplex");
            report.witness = Some(witness.to_report());
            Ok((to_value(&report), false))
        }
        Err(e) => Err(input_error(e)),
    }
}

fn delta_report<T: Scalar + ReportValue>(
    cfg: &Configuration<T>,
    index: usize,
    tolerance: f64,
    backend: Backend,
) -> Result<(Value, bool), CliError> {
    let direct = delta_determinant(cfg, index).map_err(input_error)?;
    let expanded = delta_expanded(cfg, index).map_err(input_error)?;
    let agree = if T::EXACT {
        direct.value == expanded
    } else {
        let (a, b) = (direct.value.to_f64(), expanded.to_f64());
        (a - b).abs() <= tolerance * (a.abs() + b.abs()) + direct.error_scale.to_f64()
    };
    let report = DeltaReport {
        command: "delta",
        backend: backend.name(),
        index,
        delta: direct.value.to_report(),
        delta_expanded: expanded.to_report(),
        signed_volume: signed_volume(cfg, index).map_err(input_error)?.to_report(),
        agree,
        verdict: if agree { "pass" } else { "fail" },
    };
    Ok((to_value(&report), agree))
}

/// Binary entry point: parses `std::env::args`, runs, prints, and returns the exit status.
pub fn main_with_args() -> i32 {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            use std::io::Write;
            let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
            // A closed stdout (e.g. piped into `head`) must not change the status.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
