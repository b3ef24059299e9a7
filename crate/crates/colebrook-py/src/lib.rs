//! Python bindings for the colebrook crate.
//!
//! Exposes the solver entry points, the certified reference solve, the
//! explicit approximation ladder, the Lambert-W route, and the two domain
//! sweeps. Method, start, and estimator names use the same string
//! identifiers as the command-line tool (`newton-x`, `halley`, `3pt`,
//! `value:<x0>`, `approx:<level>`, …), so results line up one-to-one.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use colebrook::lambertw::{
    colebrook_via_lambert, lambert_w as lambert_w_impl, w_argument as w_argument_impl, WMethod,
};
use colebrook::solver::{solve as solve_impl, solve_reference, Method, SolverConfig};
use colebrook::sweep::{error_map, iteration_map, summary, DomainSpec, Estimator, Sampler};
use colebrook::{approx_friction as approx_impl, FlowConditions, StartStrategy};

/// Input-shaped failures become ValueError; numerical failures inside a
/// run (singular steps, divergence, oracle misses) become RuntimeError.
fn to_py(e: colebrook::Error) -> PyErr {
    use colebrook::Error::*;
    match e {
        ZeroFriction
        | LogArgument { .. }
        | NotPositive { .. }
        | SmoothPipeStart { .. }
        | NotAFixedStart
        | OutOfDomain { .. }
        | PrincipalBranchStart { .. }
        | StartOverflow { .. }
        | InvalidDomain { .. }
        | WrongMetric
        | EmptySweep
        | UnknownTable { .. } => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn parse_method(s: &str) -> PyResult<Method> {
    Ok(match s {
        "fixed-point" => Method::FixedPoint,
        "newton-lambda" => Method::NewtonLambda,
        "newton-x" => Method::NewtonX,
        "halley" => Method::HalleyX,
        "schroder" => Method::SchroderX,
        "h3" => Method::Householder3X,
        "secant-lambda" => Method::SecantLambda,
        "secant-x" => Method::SecantX,
        "3pt" => Method::ThreePointX,
        _ => return Err(PyValueError::new_err(format!("unknown method '{s}'"))),
    })
}

fn parse_start(s: &str) -> PyResult<StartStrategy> {
    if let Some(v) = s.strip_prefix("value:") {
        let x0: f64 = v
            .parse()
            .map_err(|_| PyValueError::new_err(format!("bad start value '{v}'")))?;
        return Ok(StartStrategy::UserValue(x0));
    }
    Ok(match s {
        "traditional" => StartStrategy::Traditional,
        "fixed-newton" => StartStrategy::FixedNewton,
        "fixed-halley" => StartStrategy::FixedHalley,
        "fixed-3pt" => StartStrategy::FixedThreePoint,
        "approx" => StartStrategy::ApproxSeeded,
        _ => return Err(PyValueError::new_err(format!("unknown start '{s}'"))),
    })
}

fn parse_wmethod(s: &str) -> PyResult<WMethod> {
    Ok(match s {
        "newton" => WMethod::Newton,
        "halley" => WMethod::Halley,
        "schroder" => WMethod::Schroder,
        _ => return Err(PyValueError::new_err(format!("unknown W method '{s}'"))),
    })
}

fn parse_estimator(s: &str) -> PyResult<Estimator> {
    if let Some(v) = s.strip_prefix("approx:") {
        let level: u32 = v
            .parse()
            .ok()
            .filter(|l| *l <= 2)
            .ok_or_else(|| PyValueError::new_err(format!("bad approximation level '{v}'")))?;
        return Ok(Estimator::ApproxLevel(level));
    }
    Ok(match s {
        "traditional" => Estimator::TraditionalStart,
        "seeded" => Estimator::ApproxSeededStart,
        "lambert" => Estimator::LambertForm,
        _ => return Err(PyValueError::new_err(format!("unknown estimator '{s}'"))),
    })
}

/// Outcome of one iterative solve.
#[pyclass(get_all, frozen)]
struct SolveResult {
    /// Friction factor λ at the last iterate — a partial estimate when
    /// `converged` is false, NaN if the run left the positive reals.
    friction: f64,
    /// Transmission variable 1/√λ at the last iterate (NaN like `friction`).
    x: f64,
    /// Completed iterations.
    iterations: usize,
    /// Whether the stopping rule was met within the iteration cap.
    converged: bool,
    /// Every iterate in the method's working variable, starting point first.
    iterates: Vec<f64>,
    /// Residual at each iterate.
    residuals: Vec<f64>,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(friction={:.15e}, iterations={}, converged={})",
            self.friction, self.iterations, self.converged
        )
    }
}

/// Aggregates of one domain sweep.
#[pyclass(get_all, frozen)]
struct SweepStats {
    /// `iteration_count` or `relative_error_pct`.
    metric_kind: String,
    /// Total sampled points.
    n_points: usize,
    /// Maximum metric over converged points.
    max_value: f64,
    /// Reynolds number attaining the maximum.
    argmax_re: f64,
    /// Relative roughness attaining the maximum.
    argmax_rr: f64,
    /// Mean metric over converged points.
    mean: f64,
    /// Points that failed to converge (NaN sentinels in the map).
    n_nonconverged: usize,
}

#[pymethods]
impl SweepStats {
    fn __repr__(&self) -> String {
        format!(
            "SweepStats(metric_kind='{}', n_points={}, max_value={:.6}, mean={:.6})",
            self.metric_kind, self.n_points, self.max_value, self.mean
        )
    }
}

fn stats_of(result: &colebrook::sweep::SweepResult) -> SweepStats {
    let s = summary(result);
    SweepStats {
        metric_kind: s.metric_kind,
        n_points: s.n_points,
        max_value: s.max_value,
        argmax_re: s.argmax_re,
        argmax_rr: s.argmax_rr,
        mean: s.mean,
        n_nonconverged: s.n_nonconverged,
    }
}

/// Solves the Colebrook equation iteratively and returns the full trace.
#[pyfunction]
#[pyo3(signature = (re, rr, method="newton-x", start=None, tol=1e-8, max_iter=100))]
fn solve(
    re: f64,
    rr: f64,
    method: &str,
    start: Option<&str>,
    tol: f64,
    max_iter: usize,
) -> PyResult<SolveResult> {
    let mut cfg = SolverConfig::new(parse_method(method)?);
    if let Some(s) = start {
        cfg.start = parse_start(s)?;
    }
    cfg.tolerance = tol;
    cfg.max_iterations = max_iter;
    let t = solve_impl(FlowConditions::new(re, rr), &cfg).map_err(to_py)?;
    Ok(SolveResult {
        friction: t.final_lambda.map_or(f64::NAN, |l| l.0),
        x: t.final_x.map_or(f64::NAN, |x| x.0),
        iterations: t.iterations,
        converged: t.converged,
        iterates: t.iterates,
        residuals: t.residuals,
    })
}

/// Certified reference friction factor (residual below 1e-13).
#[pyfunction]
fn friction_factor(re: f64, rr: f64) -> PyResult<f64> {
    Ok(solve_reference(FlowConditions::new(re, rr)).map_err(to_py)?.0)
}

/// Closed-form approximation at acceleration level 0, 1, or 2
/// (one, two, or three logarithm evaluations).
#[pyfunction]
#[pyo3(signature = (re, rr, level=2))]
fn approx_friction(re: f64, rr: f64, level: u32) -> PyResult<f64> {
    Ok(approx_impl(FlowConditions::new(re, rr), level).map_err(to_py)?.0)
}

/// Principal-branch Lambert W by iteration; returns (value, iterations).
#[pyfunction]
#[pyo3(signature = (y, method="halley", z0=15.0, tol=1e-12))]
fn lambert_w(y: f64, method: &str, z0: f64, tol: f64) -> PyResult<(f64, usize)> {
    let t = lambert_w_impl(y, parse_wmethod(method)?, z0, tol).map_err(to_py)?;
    if !t.converged {
        return Err(PyRuntimeError::new_err(format!(
            "Lambert W iteration did not converge for y={y} from z0={z0}"
        )));
    }
    Ok((*t.iterates.last().expect("non-empty trace"), t.iterations))
}

/// Argument y of the Lambert-W form of the Colebrook equation.
#[pyfunction]
fn w_argument(re: f64, rr: f64) -> f64 {
    w_argument_impl(FlowConditions::new(re, rr))
}

/// Friction factor through the Lambert-W closed form.
#[pyfunction]
#[pyo3(signature = (re, rr, method="halley", tol=1e-12))]
fn friction_via_lambert(re: f64, rr: f64, method: &str, tol: f64) -> PyResult<f64> {
    Ok(
        colebrook_via_lambert(FlowConditions::new(re, rr), parse_wmethod(method)?, tol)
            .map_err(to_py)?
            .0,
    )
}

/// Iteration-count sweep over the domain (log-scaled grid sampling).
#[pyfunction]
#[pyo3(signature = (method, start=None, nx=256, ny=256, tol=1e-8))]
fn sweep_iterations(
    method: &str,
    start: Option<&str>,
    nx: usize,
    ny: usize,
    tol: f64,
) -> PyResult<SweepStats> {
    let m = parse_method(method)?;
    let s = match start {
        Some(s) => parse_start(s)?,
        None => colebrook::solver::default_start(m),
    };
    let spec = DomainSpec {
        sampler: Sampler::Grid { nx, ny },
        ..DomainSpec::default()
    };
    Ok(stats_of(&iteration_map(m, s, &spec, tol).map_err(to_py)?))
}

/// Relative-error sweep of a non-iterative estimator (log-scaled Sobol
/// sampling) against the certified reference.
#[pyfunction]
#[pyo3(signature = (estimator, n=65536))]
fn sweep_error(estimator: &str, n: usize) -> PyResult<SweepStats> {
    let spec = DomainSpec {
        sampler: Sampler::Sobol { n },
        ..DomainSpec::default()
    };
    Ok(stats_of(&error_map(parse_estimator(estimator)?, &spec).map_err(to_py)?))
}

#[pymodule]
fn colebrook_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<SolveResult>()?;
    m.add_class::<SweepStats>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(friction_factor, m)?)?;
    m.add_function(wrap_pyfunction!(approx_friction, m)?)?;
    m.add_function(wrap_pyfunction!(lambert_w, m)?)?;
    m.add_function(wrap_pyfunction!(w_argument, m)?)?;
    m.add_function(wrap_pyfunction!(friction_via_lambert, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_iterations, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_error, m)?)?;
    Ok(())
}
