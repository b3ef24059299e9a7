//! Command-line front end for the Colebrook–White toolkit: single solves
//! with full traces, domain sweeps to CSV/JSON, the closed-form
//! approximation ladder, Lambert-W evaluation, and replay of the built-in
//! reference tables.
//!
//! Exit codes: 0 success, 2 usage error, 3 non-convergence (or any solver
//! breakdown), 4 table mismatch, 5 I/O failure.

use clap::{Args, Parser, Subcommand};
use colebrook::solver::default_start;
use colebrook::sweep::{
    error_map, iteration_map, mean_iterations, summary, write_csv_path, write_json_path,
    DomainSpec, Estimator, MetricKind, Sampler, Scale,
};
use colebrook::tables::{render, replay_with_offset};
use colebrook::{
    approx_bundle, lambert_w, solve, w_argument, ApproxVariant, FlowConditions, IterationTrace,
    Method, SolverConfig, StartStrategy, WMethod,
};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_NONCONVERGED: u8 = 3;
const EXIT_TABLE_MISMATCH: u8 = 4;
const EXIT_IO: u8 = 5;

#[derive(Parser)]
#[command(
    name = "colebrook",
    version,
    about = "Colebrook-White friction-factor solvers, sweeps, and reference tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one (Re, rr) condition with a chosen iterative scheme.
    Solve(SolveArgs),
    /// Map iteration counts or estimator errors over the domain.
    Sweep(SweepArgs),
    /// Evaluate the closed-form approximation ladder.
    Approx(ApproxArgs),
    /// Evaluate the Lambert-W formulation.
    Lambertw(LambertArgs),
    /// Replay a built-in reference table against the live solvers.
    Table(TableArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Reynolds number.
    #[arg(long)]
    re: f64,
    /// Relative roughness ε/D.
    #[arg(long)]
    rr: f64,
    /// Scheme: fixed-point | newton-lambda | newton-x | halley | schroder
    /// | h3 | secant-lambda | secant-x | 3pt.
    #[arg(long, default_value = "newton-x", value_parser = parse_method)]
    method: Method,
    /// Start: traditional | fixed-newton | fixed-halley | fixed-3pt |
    /// approx | value:<x0> (default: the method's customary start).
    #[arg(long, value_parser = parse_start)]
    start: Option<StartStrategy>,
    /// Step tolerance.
    #[arg(long, env = "COLEBROOK_TOL", default_value_t = 1e-8)]
    tol: f64,
    /// Iteration cap.
    #[arg(long, env = "COLEBROOK_MAXITER", default_value_t = 100)]
    max_iter: usize,
    /// Print the per-iteration trace table.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Which map to build: iteration | error.
    #[arg(long, value_parser = ["iteration", "error"])]
    map: String,
    /// Scheme for --map iteration (same identifiers as solve).
    #[arg(long, value_parser = parse_method)]
    method: Option<Method>,
    /// Start strategy for --map iteration.
    #[arg(long, value_parser = parse_start)]
    start: Option<StartStrategy>,
    /// Estimator for --map error: approx:<level> | traditional | seeded |
    /// lambert.
    #[arg(long, value_parser = parse_estimator)]
    estimator: Option<Estimator>,
    /// Inclusive tensor grid, e.g. 256x256.
    #[arg(long, value_parser = parse_grid, conflicts_with = "sobol")]
    grid: Option<(usize, usize)>,
    /// Sobol sampler with this many points (the default, n = 65536).
    #[arg(long)]
    sobol: Option<usize>,
    /// Axis scale: log | linear.
    #[arg(long, default_value = "log", value_parser = ["log", "linear"])]
    scale: String,
    /// Reynolds-number range.
    #[arg(long, default_value_t = 4000.0)]
    re_min: f64,
    #[arg(long, default_value_t = 1e8)]
    re_max: f64,
    /// Relative-roughness range.
    #[arg(long, default_value_t = 1e-7)]
    rr_min: f64,
    #[arg(long, default_value_t = 0.05)]
    rr_max: f64,
    /// Step tolerance for iteration maps.
    #[arg(long, env = "COLEBROOK_TOL", default_value_t = 1e-8)]
    tol: f64,
    /// Output CSV path; the JSON summary lands next to it as `.json`.
    #[arg(long)]
    out: PathBuf,
    /// Worker threads for the sweep (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ApproxArgs {
    /// Reynolds number.
    #[arg(long)]
    re: f64,
    /// Relative roughness ε/D.
    #[arg(long)]
    rr: f64,
    /// Acceleration stages on top of the one-shot estimate.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=2))]
    level: u32,
    /// One-shot form: halley | schroder | h3.
    #[arg(long, default_value = "halley", value_parser = parse_variant)]
    variant: ApproxVariant,
}

#[derive(Args)]
struct LambertArgs {
    /// Reynolds number (sets y = Re·ln10/5.02).
    #[arg(long, conflicts_with = "y", required_unless_present = "y")]
    re: Option<f64>,
    /// Evaluate W at this argument directly instead.
    #[arg(long)]
    y: Option<f64>,
    /// Relative roughness; when given, also prints the friction factor via
    /// the Lambert-W route (needs --re).
    #[arg(long, requires = "re")]
    rr: Option<f64>,
    /// Iteration on z·eᶻ = y: newton | halley | schroder.
    #[arg(long, default_value = "halley", value_parser = parse_wmethod)]
    method: WMethod,
    /// Starting point of the W iteration.
    #[arg(long, default_value_t = 15.0)]
    z0: f64,
    /// Relative tolerance on the defining identity.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Print every W iterate.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Table number.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=10))]
    id: u8,
    /// Shift every computed value by this amount (testing hook for the
    /// mismatch path).
    #[arg(long, hide = true, default_value_t = 0.0)]
    perturb: f64,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Solve(a) => run_solve(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Approx(a) => run_approx(a),
        Command::Lambertw(a) => run_lambertw(a),
        Command::Table(a) => run_table(a),
    }
}

/// Formats to 15 significant digits in plain decimal notation.
fn sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let decimals = (14 - v.abs().log10().floor() as i32).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

fn parse_method(s: &str) -> Result<Method, String> {
    match s {
        "fixed-point" => Ok(Method::FixedPoint),
        "newton-lambda" => Ok(Method::NewtonLambda),
        "newton-x" => Ok(Method::NewtonX),
        "halley" => Ok(Method::HalleyX),
        "schroder" => Ok(Method::SchroderX),
        "h3" => Ok(Method::Householder3X),
        "secant-lambda" => Ok(Method::SecantLambda),
        "secant-x" => Ok(Method::SecantX),
        "3pt" => Ok(Method::ThreePointX),
        _ => Err(format!(
            "unknown method '{s}' (fixed-point, newton-lambda, newton-x, halley, schroder, h3, secant-lambda, secant-x, 3pt)"
        )),
    }
}

fn parse_start(s: &str) -> Result<StartStrategy, String> {
    match s {
        "traditional" => Ok(StartStrategy::Traditional),
        "fixed-newton" => Ok(StartStrategy::FixedNewton),
        "fixed-halley" => Ok(StartStrategy::FixedHalley),
        "fixed-3pt" => Ok(StartStrategy::FixedThreePoint),
        "approx" => Ok(StartStrategy::ApproxSeeded),
        _ => match s.strip_prefix("value:") {
            Some(v) => v
                .parse()
                .map(StartStrategy::UserValue)
                .map_err(|e| format!("bad start value '{v}': {e}")),
            None => Err(format!(
                "unknown start '{s}' (traditional, fixed-newton, fixed-halley, fixed-3pt, approx, value:<x0>)"
            )),
        },
    }
}

fn parse_estimator(s: &str) -> Result<Estimator, String> {
    match s {
        "traditional" => Ok(Estimator::TraditionalStart),
        "seeded" => Ok(Estimator::ApproxSeededStart),
        "lambert" => Ok(Estimator::LambertForm),
        _ => match s.strip_prefix("approx:") {
            Some(level) => level
                .parse()
                .map(Estimator::ApproxLevel)
                .map_err(|e| format!("bad approximation level '{level}': {e}")),
            None => Err(format!(
                "unknown estimator '{s}' (approx:<level>, traditional, seeded, lambert)"
            )),
        },
    }
}

fn parse_variant(s: &str) -> Result<ApproxVariant, String> {
    match s {
        "halley" => Ok(ApproxVariant::Halley),
        "schroder" => Ok(ApproxVariant::Schroder),
        "h3" => Ok(ApproxVariant::Householder3),
        _ => Err(format!("unknown variant '{s}' (halley, schroder, h3)")),
    }
}

fn parse_wmethod(s: &str) -> Result<WMethod, String> {
    match s {
        "newton" => Ok(WMethod::Newton),
        "halley" => Ok(WMethod::Halley),
        "schroder" => Ok(WMethod::Schroder),
        _ => Err(format!("unknown method '{s}' (newton, halley, schroder)")),
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (nx, ny) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("grid '{s}' is not of the form <nx>x<ny>"))?;
    let nx = nx.parse().map_err(|e| format!("bad grid width: {e}"))?;
    let ny = ny.parse().map_err(|e| format!("bad grid height: {e}"))?;
    Ok((nx, ny))
}

/// Prints one iterate per line: index, working value, residual, and the
/// per-step internal values (derivatives, older secant point, …).
fn print_trace(t: &IterationTrace) {
    for i in 0..t.iterates.len() {
        let aux = t
            .aux
            .get(i)
            .map(|a| {
                a.iter()
                    .map(|&v| sig15(v))
                    .collect::<Vec<_>>()
                    .join("\t")
            })
            .unwrap_or_default();
        println!(
            "{i}\t{}\t{}\t{aux}",
            sig15(t.iterates[i]),
            sig15(t.residuals[i])
        );
    }
    if let Some(c) = &t.control {
        println!("control\t{}\t{}", sig15(c.next), sig15(c.residual));
    }
}

fn run_solve(a: SolveArgs) -> ExitCode {
    let fc = FlowConditions::new(a.re, a.rr);
    let mut cfg = SolverConfig::new(a.method);
    cfg.start = a.start.unwrap_or_else(|| default_start(a.method));
    cfg.tolerance = a.tol;
    cfg.max_iterations = a.max_iter;
    match solve(fc, &cfg) {
        Ok(t) if t.converged => {
            if a.trace {
                print_trace(&t);
            }
            let x = t.final_x.expect("converged solve has a final x").0;
            println!("lambda = {}", sig15(1.0 / (x * x)));
            println!("x = {}", sig15(x));
            println!("iterations = {}", t.iterations);
            ExitCode::SUCCESS
        }
        Ok(t) => {
            print_trace(&t);
            eprintln!(
                "error: no convergence within {} iterations (last step from {})",
                t.iterations,
                sig15(*t.iterates.last().unwrap_or(&f64::NAN))
            );
            ExitCode::from(EXIT_NONCONVERGED)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NONCONVERGED)
        }
    }
}

fn run_sweep(a: SweepArgs) -> ExitCode {
    if let Some(jobs) = a.jobs {
        // Ignore the error: the global pool can only be sized once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let spec = DomainSpec {
        re_range: (a.re_min, a.re_max),
        rr_range: (a.rr_min, a.rr_max),
        scale: if a.scale == "linear" {
            Scale::Linear
        } else {
            Scale::Log10
        },
        sampler: match a.grid {
            Some((nx, ny)) => Sampler::Grid { nx, ny },
            None => Sampler::Sobol {
                n: a.sobol.unwrap_or(65536),
            },
        },
    };
    let result = match a.map.as_str() {
        "iteration" => {
            let Some(method) = a.method else {
                eprintln!("error: --map iteration needs --method");
                return ExitCode::from(2);
            };
            let start = a.start.unwrap_or_else(|| default_start(method));
            iteration_map(method, start, &spec, a.tol)
        }
        _ => {
            let Some(estimator) = a.estimator else {
                eprintln!("error: --map error needs --estimator");
                return ExitCode::from(2);
            };
            error_map(estimator, &spec)
        }
    };
    let result = match result {
        Ok(r) => r,
        Err(e @ colebrook::Error::InvalidDomain { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_NONCONVERGED);
        }
    };
    let json_path = a.out.with_extension("json");
    if let Err(e) = write_csv_path(&result, &a.out) {
        eprintln!("error: writing {}: {e}", a.out.display());
        return ExitCode::from(EXIT_IO);
    }
    if let Err(e) = write_json_path(&result, &json_path) {
        eprintln!("error: writing {}: {e}", json_path.display());
        return ExitCode::from(EXIT_IO);
    }
    let s = summary(&result);
    let mean = match result.metric_kind {
        MetricKind::IterationCount => mean_iterations(&result).unwrap_or(f64::NAN),
        MetricKind::RelativeErrorPct => s.mean,
    };
    println!(
        "{}: n={} max={:.6} at re={:.6e} rr={:.6e} mean={:.6} nonconverged={}",
        s.metric_kind, s.n_points, s.max_value, s.argmax_re, s.argmax_rr, mean, s.n_nonconverged
    );
    println!("wrote {} and {}", a.out.display(), json_path.display());
    ExitCode::SUCCESS
}

fn run_approx(a: ApproxArgs) -> ExitCode {
    let fc = FlowConditions::new(a.re, a.rr);
    match approx_bundle(fc, a.variant, a.level) {
        Ok(b) => {
            println!("A = {}", sig15(b.a));
            println!("B = {}", sig15(b.b));
            println!("C = {}", sig15(b.c));
            println!("nabla = {}", sig15(b.nabla));
            for (stage, x) in b.x_stage.iter().enumerate() {
                println!("x[{stage}] = {}", sig15(*x));
            }
            let x = b.x_stage.last().expect("at least the one-shot stage");
            println!("lambda = {}", sig15(1.0 / (x * x)));
            println!("log10 calls = {}", a.level + 1);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NONCONVERGED)
        }
    }
}

fn run_lambertw(a: LambertArgs) -> ExitCode {
    let y = match (a.y, a.re) {
        (Some(y), _) => y,
        (None, Some(re)) => w_argument(FlowConditions::new(re, 0.0)),
        (None, None) => unreachable!("clap enforces one of --re/--y"),
    };
    match lambert_w(y, a.method, a.z0, a.tol) {
        Ok(t) if t.converged => {
            if a.trace {
                for (i, z) in t.iterates.iter().enumerate() {
                    println!("{i}\t{}", sig15(*z));
                }
            }
            let z = t.iterates.last().expect("non-empty trace");
            println!("y = {}", sig15(y));
            println!("W(y) = {}", sig15(*z));
            println!("iterations = {}", t.iterations);
            if let (Some(re), Some(rr)) = (a.re, a.rr) {
                let fc = FlowConditions::new(re, rr);
                match colebrook::colebrook_via_lambert(fc, a.method, a.tol) {
                    Ok(lam) => println!("lambda = {}", sig15(lam.0)),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_NONCONVERGED);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Ok(t) => {
            for (i, z) in t.iterates.iter().enumerate() {
                println!("{i}\t{}", sig15(*z));
            }
            eprintln!("error: W iteration did not converge from z0={}", a.z0);
            ExitCode::from(EXIT_NONCONVERGED)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NONCONVERGED)
        }
    }
}

fn run_table(a: TableArgs) -> ExitCode {
    match replay_with_offset(a.id, a.perturb) {
        Ok(t) => {
            print!("{}", render(&t));
            if t.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_TABLE_MISMATCH)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
