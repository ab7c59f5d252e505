//! Command-line front end. [`run`] takes the argument list and output streams
//! so the binary stays a one-liner and the commands are testable in-process.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 solver error, 4 batch
//! failures or a disagreement in `check`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::corpus::random_monic;
use crate::error::Error;
use crate::numeric::ToleranceConfig;
use crate::parse::{format_polynomial, parse_polynomial};
use crate::polynomial::Polynomial;
use crate::reference::{solve_aberth, solve_classical, IterationSettings};
use crate::render::{self, num, ReportView};
use crate::report::SolveReport;
use crate::rng::SplitMix64;
use crate::unified::{SolverOptions, UnifiedSolver};
use crate::verify::{match_roots, match_tolerance_for};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_FAILURES: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "unisolve", version, about = "Roots of polynomials of degree 2 to 4 by the unified decomposition method")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one polynomial and print its roots.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[command(flatten)]
        common: CommonArgs,
        /// Print every intermediate value of the decomposition.
        #[arg(long)]
        trace: bool,
    },
    /// Print the two constituent factors of a polynomial.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Solve with the unified, classical and Aberth methods and compare.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Agreement tolerance (default 1e-6, relaxed to 1e-4 for clustered roots).
        #[arg(long)]
        match_tol: Option<f64>,
    },
    /// Solve seeded random monic polynomials and validate against Aberth.
    Batch {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Interval for the non-leading coefficients, as `lo,hi`.
        #[arg(long, default_value = "-10,10", allow_hyphen_values = true)]
        coeff_range: String,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        match_tol: Option<f64>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Polynomial in x, e.g. "x^3 - 2x + 1".
    pub polynomial: Option<String>,
    /// Comma-separated coefficients, highest degree first.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "polynomial")]
    pub coeffs: Option<String>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Residual tolerance, relative to the coefficient scale (default 1e-8).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Report singular decompositions as errors instead of falling back to Aberth.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Unified method, falling back to Aberth unless --strict.
    Auto,
    Unified,
    Classical,
    Aberth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A failure already mapped to its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_SOLVER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Solve {
            input,
            method,
            common,
            trace,
        } => {
            let poly = read_input(&input)?;
            let report = solve_with(method, &poly, &common)?;
            Ok((render_report(&report, common.format, trace), EXIT_OK))
        }
        Command::Decompose { input, common, trace } => {
            let poly = read_input(&input)?;
            let solver = unified_solver(&common)?;
            solver.decompose(&poly)?;
            let report = solver.solve(&poly)?;
            Ok((render_report(&report, common.format, trace), EXIT_OK))
        }
        Command::Check {
            input,
            common,
            match_tol,
        } => {
            let poly = read_input(&input)?;
            check(&poly, &common, match_tol)
        }
        Command::Batch {
            count,
            degree,
            seed,
            coeff_range,
            common,
            match_tol,
        } => batch(count, degree, seed, &coeff_range, &common, match_tol),
    }
}

fn read_input(input: &InputArgs) -> Result<Polynomial, Failure> {
    match (&input.polynomial, &input.coeffs) {
        (Some(text), None) => Ok(parse_polynomial(text)?),
        (None, Some(list)) => {
            let coeffs = list
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    s.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| usage(format!("invalid coefficient {s:?} in --coeffs")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::new(coeffs)?)
        }
        (None, None) => Err(usage("give a polynomial or --coeffs")),
        (Some(_), Some(_)) => Err(usage("give either a polynomial or --coeffs, not both")),
    }
}

fn tolerances(common: &CommonArgs, match_tol: Option<f64>) -> Result<ToleranceConfig, Failure> {
    let mut tol = ToleranceConfig::default();
    if let Some(t) = common.tol {
        tol.eps_residual = t;
    }
    if let Some(m) = match_tol {
        tol.eps_match = m;
    }
    tol.validate()?;
    Ok(tol)
}

fn unified_solver(common: &CommonArgs) -> Result<UnifiedSolver, Failure> {
    Ok(UnifiedSolver::new(SolverOptions {
        tol: tolerances(common, None)?,
        strict: common.strict,
        iteration: IterationSettings::default(),
    })?)
}

fn solve_with(method: MethodArg, poly: &Polynomial, common: &CommonArgs) -> Result<SolveReport, Failure> {
    Ok(match method {
        MethodArg::Auto | MethodArg::Unified => unified_solver(common)?.solve(poly)?,
        MethodArg::Classical => solve_classical(poly)?,
        MethodArg::Aberth => solve_aberth(poly, &IterationSettings::default())?,
    })
}

fn render_report(report: &SolveReport, format: Format, trace: bool) -> String {
    match format {
        Format::Text => render::report_text(report, trace),
        Format::Json => render::report_json(report, trace) + "\n",
    }
}

#[derive(Serialize)]
struct MatchView {
    left: &'static str,
    right: &'static str,
    max_distance: f64,
    tolerance: f64,
    matched: bool,
}

#[derive(Serialize)]
struct CheckView {
    degree: usize,
    reports: BTreeMap<&'static str, ReportView>,
    matches: Vec<MatchView>,
    agree: bool,
}

fn check(poly: &Polynomial, common: &CommonArgs, match_tol: Option<f64>) -> Result<(String, i32), Failure> {
    let tol = tolerances(common, match_tol)?;
    let degree = poly.monic_normalize()?.degree();
    if !(2..=4).contains(&degree) {
        return Err(Error::UnsupportedDegree { degree, min: 2, max: 4 }.into());
    }
    let reports = [
        ("unified", unified_solver(common)?.solve(poly)?),
        ("classical", solve_classical(poly)?),
        ("aberth", solve_aberth(poly, &IterationSettings::default())?),
    ];
    let threshold = match_tolerance_for(&reports[2].1.roots, tol.eps_match);
    let mut matches = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let m = match_roots(&reports[i].1.roots, &reports[j].1.roots, threshold)?;
        matches.push((reports[i].0, reports[j].0, m));
    }
    let agree = matches.iter().all(|(_, _, m)| m.matched);
    let code = if agree { EXIT_OK } else { EXIT_FAILURES };

    let text = match common.format {
        Format::Json => {
            let view = CheckView {
                degree,
                reports: reports.iter().map(|(name, r)| (*name, ReportView::new(r, false))).collect(),
                matches: matches
                    .iter()
                    .map(|(l, r, m)| MatchView {
                        left: l,
                        right: r,
                        max_distance: m.max_distance,
                        tolerance: threshold,
                        matched: m.matched,
                    })
                    .collect(),
                agree,
            };
            render::to_json(&view) + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polynomial: {}", format_polynomial(&reports[0].1.input, render::TEXT_DIGITS));
            for (name, r) in &reports {
                let roots: Vec<String> = r.sorted_roots().iter().map(|z| render::complex(*z)).collect();
                let _ = writeln!(s, "{name}:");
                let _ = writeln!(s, "  roots: {}", roots.join(", "));
                let _ = writeln!(s, "  max residual: {}", num(r.max_residual));
            }
            for (l, r, m) in &matches {
                let _ = writeln!(s, "{}", render::match_line(l, r, m, threshold));
            }
            let _ = writeln!(s, "{}", if agree { "all methods agree" } else { "methods disagree" });
            s
        }
    };
    Ok((text, code))
}

fn parse_range(text: &str) -> Result<(f64, f64), Failure> {
    let bad = || usage(format!("invalid --coeff-range {text:?}: expected lo,hi with lo <= hi"));
    let (lo, hi) = text.split_once(',').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Debug, Serialize)]
struct BatchFailure {
    index: usize,
    coeffs: Vec<f64>,
    reason: String,
}

#[derive(Debug, Serialize)]
struct BatchSummary {
    degree: usize,
    count: usize,
    seed: u64,
    coeff_range: (f64, f64),
    max_residual: f64,
    max_scaled_residual: f64,
    max_match_distance: f64,
    special_cases: BTreeMap<String, usize>,
    failures: Vec<BatchFailure>,
}

/// Validates one polynomial; `Err` carries the failure reason.
fn batch_one(
    solver: &UnifiedSolver,
    poly: &Polynomial,
    summary: &mut BatchSummary,
) -> Result<(), String> {
    let tol = solver.options().tol;
    let unified = solver.solve(poly).map_err(|e| format!("unified: {e}"))?;
    let aberth = solve_aberth(poly, &IterationSettings::default()).map_err(|e| format!("aberth: {e}"))?;
    *summary.special_cases.entry(unified.special_case().to_string()).or_default() += 1;

    let scale = poly.coefficient_scale().max(1.0);
    let scaled = unified.max_residual / scale;
    summary.max_residual = summary.max_residual.max(unified.max_residual);
    summary.max_scaled_residual = summary.max_scaled_residual.max(scaled);
    let threshold = match_tolerance_for(&aberth.roots, tol.eps_match);
    let m = match_roots(&unified.roots, &aberth.roots, threshold).map_err(|e| e.to_string())?;
    summary.max_match_distance = summary.max_match_distance.max(m.max_distance);

    if !m.matched {
        return Err(format!(
            "unified and aberth roots differ by {} (tolerance {})",
            num(m.max_distance),
            num(threshold)
        ));
    }
    if scaled > tol.eps_residual {
        return Err(format!("residual {} exceeds {} x scale", num(unified.max_residual), num(tol.eps_residual)));
    }
    Ok(())
}

fn batch(
    count: usize,
    degree: usize,
    seed: u64,
    coeff_range: &str,
    common: &CommonArgs,
    match_tol: Option<f64>,
) -> Result<(String, i32), Failure> {
    if count < 1 {
        return Err(usage("--count must be at least 1"));
    }
    if !(2..=4).contains(&degree) {
        return Err(usage(format!("--degree must be 2, 3 or 4, got {degree}")));
    }
    let range = parse_range(coeff_range)?;
    let solver = UnifiedSolver::new(SolverOptions {
        tol: tolerances(common, match_tol)?,
        strict: common.strict,
        iteration: IterationSettings::default(),
    })?;

    let mut summary = BatchSummary {
        degree,
        count,
        seed,
        coeff_range: range,
        max_residual: 0.0,
        max_scaled_residual: 0.0,
        max_match_distance: 0.0,
        special_cases: BTreeMap::new(),
        failures: Vec::new(),
    };
    let mut rng = SplitMix64::new(seed);
    for index in 0..count {
        let poly = random_monic(&mut rng, degree, range);
        if let Err(reason) = batch_one(&solver, &poly, &mut summary) {
            summary.failures.push(BatchFailure {
                index,
                coeffs: poly.coeffs().to_vec(),
                reason,
            });
        }
    }
    let code = if summary.failures.is_empty() { EXIT_OK } else { EXIT_FAILURES };

    let text = match common.format {
        Format::Json => render::to_json(&summary) + "\n",
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "batch: degree {degree}, count {count}, seed {seed}, coefficients in [{}, {}]",
                num(range.0),
                num(range.1)
            );
            let _ = writeln!(s, "max residual: {}", num(summary.max_residual));
            let _ = writeln!(s, "max residual / scale: {}", num(summary.max_scaled_residual));
            let _ = writeln!(s, "max match distance: {}", num(summary.max_match_distance));
            let _ = writeln!(s, "special cases:");
            for (case, n) in &summary.special_cases {
                let _ = writeln!(s, "  {case}: {n}");
            }
            let _ = writeln!(s, "failures: {}", summary.failures.len());
            for f in &summary.failures {
                let poly = Polynomial::new(f.coeffs.clone()).expect("generated polynomial");
                let _ = writeln!(s, "  #{}: {} ({})", f.index, format_polynomial(&poly, 17), f.reason);
            }
            s
        }
    };
    Ok((text, code))
}
