//! Iterative Colebrook solvers and their traces.
//!
//! Nine schemes share one driver and one configuration type:
//!
//! | method                | space | update per iteration                          |
//! |-----------------------|-------|-----------------------------------------------|
//! | [`Method::FixedPoint`]      | x | `x ← −2·log10(2.51·x/Re + rr/3.7)`       |
//! | [`Method::NewtonLambda`]    | λ | `λ ← λ − f/f′` (direct, with |λ| guard)  |
//! | [`Method::NewtonX`]         | x | `x ← x − f/f′`                           |
//! | [`Method::HalleyX`]         | x | `x ← x − 2ff′/(2f′² − ff″)`              |
//! | [`Method::SchroderX`]       | x | `x ← x − f/f′ − f″f²/(2f′³)`             |
//! | [`Method::Householder3X`]   | x | third-order step using f, f′, f″, f‴     |
//! | [`Method::SecantLambda`]    | λ | two-point slope, no derivatives          |
//! | [`Method::SecantX`]         | x | two-point slope, no derivatives          |
//! | [`Method::ThreePointX`]     | x | three internal evaluations per outer step |
//!
//! Every solve returns an [`IterationTrace`] holding all iterates, the
//! residual at each, and the per-step derivative/internal values, so worked
//! iteration tables can be re-rendered from the trace alone. Non-convergence
//! is data (`converged = false`), never a panic or error, so domain sweeps
//! can record failures; errors are reserved for singular steps, invalid
//! starts, and strict-domain rejection.
//!
//! The stopping rule is `|w_{i+1} − w_i| ≤ tolerance` in the method's
//! working variable `w` (x or λ). For x-space methods this is stricter near
//! the root than the equivalent λ criterion, since |dλ| ≈ 2·x⁻³·|dx| < |dx|
//! for x > 2; a λ-space rule is available via
//! [`SolverConfig::stop_on_lambda`]. The `verify` flag appends one extra
//! "control" iteration after convergence — the classic printed-table
//! convention — without counting it.

use crate::eqn::{
    residual_lambda, residual_lambda_prime, residual_x, residual_x_prime, residual_x_second,
    residual_x_third, FlowConditions, FrictionFactor, TransmissionFactor,
};
use crate::start::{initial_x, StartStrategy};
use crate::Error;

/// The iterative scheme to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Direct re-substitution in x.
    FixedPoint,
    /// Newton–Raphson on the λ-space residual.
    NewtonLambda,
    /// Newton–Raphson on the x-space residual.
    NewtonX,
    /// Halley's second-order Householder step in x.
    HalleyX,
    /// Schröder's second-order Householder step in x.
    SchroderX,
    /// Third-order Householder step in x.
    Householder3X,
    /// Derivative-free secant in λ.
    SecantLambda,
    /// Derivative-free secant in x.
    SecantX,
    /// Džunić–Petković optimal-order three-point scheme in x.
    ThreePointX,
}

/// Which working variable a method iterates in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Space {
    Lambda,
    X,
}

/// Full configuration of one solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Scheme to run.
    pub method: Method,
    /// Starting-point strategy (resolved via [`initial_x`]).
    pub start: StartStrategy,
    /// Step-size stopping tolerance (default 1e-8).
    pub tolerance: f64,
    /// Iteration cap (default 100); hitting it yields a non-converged trace.
    pub max_iterations: usize,
    /// Reject conditions outside the validated domain instead of solving.
    pub strict_domain: bool,
    /// Append a control step (one verification iteration after convergence,
    /// excluded from the count) to the trace.
    pub verify: bool,
    /// Stop on |Δλ| ≤ tolerance instead of the working-variable step.
    pub stop_on_lambda: bool,
}

impl SolverConfig {
    /// Config for `method` with its customary start ([`default_start`]) and
    /// the default tolerance/cap.
    pub fn new(method: Method) -> Self {
        SolverConfig {
            method,
            start: default_start(method),
            tolerance: 1e-8,
            max_iterations: 100,
            strict_domain: false,
            verify: false,
            stop_on_lambda: false,
        }
    }

    /// Same config with a different start strategy.
    pub fn with_start(mut self, start: StartStrategy) -> Self {
        self.start = start;
        self
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig::new(Method::NewtonX)
    }
}

/// The customary start for each method: the three-point scheme has its own
/// tuned fixed constant; everything else defaults to the rough-law start.
pub fn default_start(method: Method) -> StartStrategy {
    match method {
        Method::ThreePointX => StartStrategy::FixedThreePoint,
        _ => StartStrategy::Traditional,
    }
}

/// One verification iteration taken after convergence (`verify` flag).
#[derive(Debug, Clone, PartialEq)]
pub struct ControlStep {
    /// Residual at the converged iterate.
    pub residual: f64,
    /// Per-step values in the same layout as [`IterationTrace::aux`].
    pub aux: Vec<f64>,
    /// Where the extra step lands (should match the converged iterate to
    /// printed precision).
    pub next: f64,
}

/// Complete record of one iterative solve.
///
/// `iterates[i]` is the i-th value of the working variable (index 0 is the
/// start), `residuals[i]` the residual there, and `aux[i]` the values used
/// by step i (derivatives for the Householder family; the older point and
/// its residual for secant; the six internal values `f(x), f′(x), y, f(y),
/// z, f(z)` for the three-point scheme).
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    /// All iterates in the working variable, starting value first.
    pub iterates: Vec<f64>,
    /// Residual at each iterate (same length as `iterates`; NaN if an
    /// iterate went non-finite).
    pub residuals: Vec<f64>,
    /// Per-step internal values; `aux.len() == iterations`.
    pub aux: Vec<Vec<f64>>,
    /// Whether the step criterion was met within the cap.
    pub converged: bool,
    /// Number of steps taken (`iterates.len() − 1`).
    pub iterations: usize,
    /// Final friction factor, when the last iterate maps to one.
    pub final_lambda: Option<FrictionFactor>,
    /// Final transmission factor, likewise.
    pub final_x: Option<TransmissionFactor>,
    /// The verification iteration, present when requested and converged.
    pub control: Option<ControlStep>,
}

/// λ seen from the working variable.
fn lambda_of(space: Space, w: f64) -> f64 {
    match space {
        Space::Lambda => w,
        Space::X => 1.0 / (w * w),
    }
}

/// Shared iteration driver.
///
/// `res` evaluates the working-space residual; `step` maps (current,
/// residual) to (next, per-step aux values). A residual error or non-finite
/// iterate after a step ends the solve as non-converged data; step errors
/// (singular denominators, log-domain exits) abort with the error.
fn run_iteration<R, S>(
    cfg: &SolverConfig,
    w0: f64,
    space: Space,
    res: R,
    mut step: S,
) -> Result<IterationTrace, Error>
where
    R: Fn(f64) -> Result<f64, Error>,
    S: FnMut(f64, f64) -> Result<(f64, Vec<f64>), Error>,
{
    let mut iterates = vec![w0];
    let mut residuals = vec![res(w0)?];
    let mut aux: Vec<Vec<f64>> = Vec::new();
    let mut converged = false;

    for _ in 0..cfg.max_iterations {
        let cur = *iterates.last().expect("non-empty");
        let f_cur = *residuals.last().expect("non-empty");
        let (next, a) = step(cur, f_cur)?;
        aux.push(a);
        iterates.push(next);
        if !next.is_finite() {
            residuals.push(f64::NAN);
            break;
        }
        match res(next) {
            Ok(f) => residuals.push(f),
            Err(_) => {
                residuals.push(f64::NAN);
                break;
            }
        }
        let delta = if cfg.stop_on_lambda {
            (lambda_of(space, next) - lambda_of(space, cur)).abs()
        } else {
            (next - cur).abs()
        };
        if delta <= cfg.tolerance {
            converged = true;
            break;
        }
    }

    let control = if converged && cfg.verify {
        let cur = *iterates.last().expect("non-empty");
        let f_cur = *residuals.last().expect("non-empty");
        let (next, a) = step(cur, f_cur)?;
        Some(ControlStep {
            residual: f_cur,
            aux: a,
            next,
        })
    } else {
        None
    };

    let last = *iterates.last().expect("non-empty");
    let (final_lambda, final_x) = if last.is_finite() && last > 0.0 {
        match space {
            Space::Lambda => (
                Some(FrictionFactor(last)),
                Some(TransmissionFactor(1.0 / last.sqrt())),
            ),
            Space::X => (
                Some(FrictionFactor(1.0 / (last * last))),
                Some(TransmissionFactor(last)),
            ),
        }
    } else {
        (None, None)
    };

    Ok(IterationTrace {
        iterations: iterates.len() - 1,
        iterates,
        residuals,
        aux,
        converged,
        final_lambda,
        final_x,
        control,
    })
}

/// Strict-domain gate plus start resolution, shared by every solver.
fn prepare(fc: FlowConditions, cfg: &SolverConfig) -> Result<f64, Error> {
    if cfg.strict_domain && !fc.in_domain() {
        return Err(Error::OutOfDomain { re: fc.re, rr: fc.rr });
    }
    Ok(initial_x(cfg.start, fc)?.0)
}

/// Direct re-substitution `x ← −2·log10(2.51·x/Re + rr/3.7)`.
///
/// Linearly convergent with a small contraction factor; typically done in
/// about 8 iterations at the default tolerance.
pub fn solve_fixed_point(fc: FlowConditions, cfg: &SolverConfig) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, _f| {
        let arg = 2.51 * cur / fc.re + fc.rr / 3.7;
        if arg <= 0.0 {
            return Err(Error::LogArgument { arg });
        }
        Ok((-2.0 * arg.log10(), Vec::new()))
    })
}

/// Newton–Raphson directly on λ.
///
/// The |λ| guard inside the residual lets the iteration pass through a
/// transient negative iterate (a far-off fixed start produces one) and
/// still converge.
pub fn solve_newton_lambda(
    fc: FlowConditions,
    cfg: &SolverConfig,
) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    let lam0 = 1.0 / (x0 * x0);
    run_iteration(cfg, lam0, Space::Lambda, |l| residual_lambda(l, fc), |cur, f| {
        let fp = residual_lambda_prime(cur, fc)?;
        if fp == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        Ok((cur - f / fp, vec![fp]))
    })
}

/// Newton–Raphson on the transmission factor.
pub fn solve_newton_x(fc: FlowConditions, cfg: &SolverConfig) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, f| {
        let fp = residual_x_prime(cur, fc)?;
        if fp == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        Ok((cur - f / fp, vec![fp]))
    })
}

/// Halley's method in x: `x ← x − 2ff′/(2f′² − ff″)`.
pub fn solve_halley_x(fc: FlowConditions, cfg: &SolverConfig) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, f| {
        let fp = residual_x_prime(cur, fc)?;
        let fpp = residual_x_second(cur, fc)?;
        let den = 2.0 * fp * fp - f * fpp;
        if den == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        Ok((cur - 2.0 * f * fp / den, vec![fp, fpp]))
    })
}

/// Schröder's method in x: `x ← x − f/f′ − f″f²/(2f′³)`.
pub fn solve_schroder_x(fc: FlowConditions, cfg: &SolverConfig) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, f| {
        let fp = residual_x_prime(cur, fc)?;
        let fpp = residual_x_second(cur, fc)?;
        if fp == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        Ok((
            cur - f / fp - fpp * f * f / (2.0 * fp * fp * fp),
            vec![fp, fpp],
        ))
    })
}

/// Third-order Householder step in x:
///
/// ```text
/// x ← x − (6ff′² − 3f²f″) / (6f′³ − 6ff′f″ + f²f‴)
/// ```
///
/// Note the f″ in the numerator's second term: the same expression is
/// sometimes misprinted with f′ there, which silently degrades the scheme —
/// only the f″ form reproduces the third-order iterate patterns.
pub fn solve_householder3_x(
    fc: FlowConditions,
    cfg: &SolverConfig,
) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, f| {
        let fp = residual_x_prime(cur, fc)?;
        let fpp = residual_x_second(cur, fc)?;
        let fppp = residual_x_third(cur, fc)?;
        let num = 6.0 * f * fp * fp - 3.0 * f * f * fpp;
        let den = 6.0 * fp * fp * fp - 6.0 * f * fp * fpp + f * f * fppp;
        if den == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        Ok((cur - num / den, vec![fp, fpp, fppp]))
    })
}

/// Which variable the secant scheme works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecantSpace {
    /// Iterate on λ.
    Lambda,
    /// Iterate on x.
    X,
}

/// Derivative-free secant iteration.
///
/// Needs two starting values: the older point is always the fixed
/// Newton-family constant (x = 6.44569593948452, or its λ image), the newer
/// point comes from `cfg.start` (traditional by default) — the pairing the
/// worked secant tables use. A start that collides with the fixed constant
/// makes the first slope 0/0 and errors.
pub fn solve_secant(
    fc: FlowConditions,
    cfg: &SolverConfig,
    space: SecantSpace,
) -> Result<IterationTrace, Error> {
    let x_new = prepare(fc, cfg)?;
    let mut x_fixed = crate::start::start_fixed(StartStrategy::FixedNewton)?.0;
    // A smooth-pipe Traditional start resolves to this same fixed
    // constant; re-substitute the older point once so the secant has two
    // distinct points to draw its line through.
    if (x_fixed - x_new).abs() <= 1e-9 * x_new {
        let arg = fc.rr / 3.7 + 2.51 * x_fixed / fc.re;
        if arg <= 0.0 {
            return Err(Error::LogArgument { arg });
        }
        x_fixed = -2.0 * arg.log10();
    }
    match space {
        SecantSpace::Lambda => {
            let res = |l: f64| residual_lambda(l, fc);
            let mut old = 1.0 / (x_fixed * x_fixed);
            let mut f_old = res(old)?;
            run_iteration(cfg, 1.0 / (x_new * x_new), Space::Lambda, res, move |cur, f| {
                if f == 0.0 || (f == f_old && f.abs() <= 1e-9) {
                    // Exactly on the root, or the residual has plateaued at
                    // rounding noise: stay put (zero step ⇒ converged).
                    let a = vec![old, f_old];
                    old = cur;
                    f_old = f;
                    return Ok((cur, a));
                }
                if f == f_old {
                    return Err(Error::SingularStep { at: cur });
                }
                let next = cur - f * (cur - old) / (f - f_old);
                let a = vec![old, f_old];
                old = cur;
                f_old = f;
                Ok((next, a))
            })
        }
        SecantSpace::X => {
            let res = |x: f64| residual_x(x, fc);
            let mut old = x_fixed;
            let mut f_old = res(old)?;
            run_iteration(cfg, x_new, Space::X, res, move |cur, f| {
                if f == 0.0 || (f == f_old && f.abs() <= 1e-9) {
                    // Exactly on the root, or the residual has plateaued at
                    // rounding noise: stay put (zero step ⇒ converged).
                    let a = vec![old, f_old];
                    old = cur;
                    f_old = f;
                    return Ok((cur, a));
                }
                if f == f_old {
                    return Err(Error::SingularStep { at: cur });
                }
                let next = cur - f * (cur - old) / (f - f_old);
                let a = vec![old, f_old];
                old = cur;
                f_old = f;
                Ok((next, a))
            })
        }
    }
}

/// Džunić–Petković three-point scheme; each outer step evaluates the
/// residual at three internal points (x, then a Newton point y, then a
/// corrected point z) and reuses f′ only at x:
///
/// ```text
/// y = x − f(x)/f′(x)
/// z = y − f(x)/(f(x) − 2f(y)) · f(y)/f′(x)
/// x′ = z − f(z) / ( f′(x) · [1 − 2f(y)/f(x) − (f(y)/f(x))²]
///                          · [1 − f(z)/f(y)] · [1 − 2f(z)/f(x)] )
/// ```
///
/// Exact zero residuals at any internal point short-circuit to that point
/// (the correction terms would otherwise divide 0 by 0).
pub fn solve_threepoint_x(
    fc: FlowConditions,
    cfg: &SolverConfig,
) -> Result<IterationTrace, Error> {
    let x0 = prepare(fc, cfg)?;
    run_iteration(cfg, x0, Space::X, |x| residual_x(x, fc), |cur, fx| {
        let fp = residual_x_prime(cur, fc)?;
        if fp == 0.0 {
            return Err(Error::SingularStep { at: cur });
        }
        if fx == 0.0 {
            return Ok((cur, vec![fx, fp, cur, 0.0, cur, 0.0]));
        }
        let y = cur - fx / fp;
        let fy = residual_x(y, fc)?;
        if fy == 0.0 {
            return Ok((y, vec![fx, fp, y, fy, y, fy]));
        }
        let q = fx - 2.0 * fy;
        if q == 0.0 {
            // Cancellation this exact only happens at rounding-noise
            // residuals; accept the Newton point rather than divide by 0.
            if fy.abs() <= 1e-9 {
                return Ok((y, vec![fx, fp, y, fy, y, fy]));
            }
            return Err(Error::SingularStep { at: y });
        }
        let z = y - (fx / q) * (fy / fp);
        let fz = residual_x(z, fc)?;
        let aux = vec![fx, fp, y, fy, z, fz];
        if fz == 0.0 {
            return Ok((z, aux));
        }
        let r = fy / fx;
        let bracket = (1.0 - 2.0 * r - r * r) * (1.0 - fz / fy) * (1.0 - 2.0 * fz / fx);
        let den = fp * bracket;
        if den == 0.0 {
            // Same plateau case (for example f(y) == f(z) at noise level):
            // the corrected point is already the root to full precision.
            if fz.abs() <= 1e-9 {
                return Ok((z, aux));
            }
            return Err(Error::SingularStep { at: z });
        }
        Ok((z - fz / den, aux))
    })
}

/// Runs the scheme selected by `cfg.method`.
pub fn solve(fc: FlowConditions, cfg: &SolverConfig) -> Result<IterationTrace, Error> {
    match cfg.method {
        Method::FixedPoint => solve_fixed_point(fc, cfg),
        Method::NewtonLambda => solve_newton_lambda(fc, cfg),
        Method::NewtonX => solve_newton_x(fc, cfg),
        Method::HalleyX => solve_halley_x(fc, cfg),
        Method::SchroderX => solve_schroder_x(fc, cfg),
        Method::Householder3X => solve_householder3_x(fc, cfg),
        Method::SecantLambda => solve_secant(fc, cfg, SecantSpace::Lambda),
        Method::SecantX => solve_secant(fc, cfg, SecantSpace::X),
        Method::ThreePointX => solve_threepoint_x(fc, cfg),
    }
}

/// High-precision ground truth: Newton in x from the traditional start
/// (fixed constant for smooth pipes), tolerance 1e-15 floored at a few
/// ulps of the iterate (for x beyond ~9 the step oscillates by one ulp,
/// ±1.8e-15, and an absolute 1e-15 would never be met), cap 200, certified
/// to |residual_x| ≤ 1e-13. Every error map measures against this.
pub fn solve_reference(fc: FlowConditions) -> Result<FrictionFactor, Error> {
    let mut x = initial_x(StartStrategy::Traditional, fc)?.0;
    let mut converged = false;
    for _ in 0..200 {
        let step = residual_x(x, fc)? / residual_x_prime(x, fc)?;
        x -= step;
        if step.abs() <= 1e-15f64.max(4.0 * f64::EPSILON * x.abs()) {
            converged = true;
            break;
        }
    }
    if !converged || residual_x(x, fc)?.abs() > 1e-13 {
        return Err(Error::OracleFailure { re: fc.re, rr: fc.rr });
    }
    Ok(FrictionFactor(1.0 / (x * x)))
}
