//! Iterative solvers for the Colebrook–White flow-friction equation.
//!
//! The Darcy friction factor λ for turbulent pipe flow satisfies the
//! implicit Colebrook relation
//!
//! ```text
//! 1/√λ = −2·log10( 2.51/(Re·√λ) + rr/3.7 )
//! ```
//!
//! with Reynolds number `Re` and relative roughness `rr = ε/D`. This crate
//! solves it every way that is practical at double precision and keeps the
//! full iteration record of each run:
//!
//! * [`eqn`] — the residual in λ and in the transmission variable
//!   `x = 1/√λ`, with analytic first, second and third derivatives;
//! * [`start`] — starting-point strategies (the rough-law start, tuned
//!   fixed constants, an explicit-approximation seed);
//! * [`solver`] — fixed-point, Newton–Raphson (both variables), Halley,
//!   Schröder, third-order Householder, secant (both variables), and an
//!   optimal-order three-point scheme, all through one traced engine;
//! * [`lambertw`] — the equivalent Lambert-W formulation, its iteration
//!   columns, and the overflow threshold that motivates the shifted form;
//! * [`approx`] — non-iterative approximations with a counted logarithm
//!   budget, plus one-step acceleration;
//! * [`sweep`] — domain sweeps producing iteration-count and
//!   relative-error maps over `4000 ≤ Re ≤ 1e8`, `0 < rr ≤ 0.05`, sampled
//!   on grids or a two-dimensional Sobol sequence ([`sobol`]);
//! * [`tables`] — built-in worked iteration tables replayed cell-by-cell
//!   against the live solvers.
//!
//! Benchmark conditions used throughout: (Re=5e6, rr=2.5e-5) with
//! λ=0.010279663295529 and (Re=3e4, rr=9e-3) with λ=0.038630738574792.
//!
//! ```
//! use colebrook::{solve, FlowConditions, Method, SolverConfig};
//!
//! let fc = FlowConditions::new(5e6, 2.5e-5);
//! let trace = solve(fc, &SolverConfig::new(Method::NewtonX)).unwrap();
//! assert!(trace.converged);
//! let lambda = trace.final_lambda.unwrap().0;
//! assert!((lambda - 0.010279663295529).abs() < 1e-12);
//! ```

pub mod approx;
pub mod eqn;
pub mod lambertw;
pub mod sobol;
pub mod solver;
pub mod start;
pub mod sweep;
pub mod tables;

pub use approx::{approx_bundle, approx_friction, ApproxBundle, ApproxVariant};
pub use eqn::{
    lambda_from_x, residual_lambda, residual_x, x_from_lambda, FlowConditions, FrictionFactor,
    TransmissionFactor,
};
pub use lambertw::{colebrook_via_lambert, lambert_w, w_argument, WMethod};
pub use solver::{
    solve, solve_reference, ControlStep, IterationTrace, Method, SolverConfig,
};
pub use start::StartStrategy;
pub use sweep::{error_map, iteration_map, DomainSpec, Estimator, MetricKind, SweepResult};
pub use tables::{replay, TableCheck};

/// Everything that can go wrong across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A friction factor of zero has no transmission variable.
    #[error("friction factor is zero; x = 1/sqrt(lambda) is undefined")]
    ZeroFriction,

    /// The logarithm argument collapsed to zero or below.
    #[error("logarithm argument {arg} is not positive")]
    LogArgument { arg: f64 },

    /// A quantity that must be positive was not.
    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: f64 },

    /// The rough-law start needs a non-zero roughness.
    #[error("rough-law start is undefined for a smooth pipe (rr = {rr}); use a fixed start")]
    SmoothPipeStart { rr: f64 },

    /// A fixed starting constant was requested for a non-fixed strategy.
    #[error("strategy has no fixed starting constant")]
    NotAFixedStart,

    /// An iteration step divided by a vanishing denominator.
    #[error("singular step at iterate {at}")]
    SingularStep { at: f64 },

    /// Conditions fall outside the validated domain (strict mode).
    #[error("conditions Re={re}, rr={rr} are outside 4000 <= Re <= 1e8, 0 <= rr <= 0.05")]
    OutOfDomain { re: f64, rr: f64 },

    /// Lambert-W starts below the principal-branch limit.
    #[error("Lambert W start z0={z0} is below the principal branch (z > -1)")]
    PrincipalBranchStart { z0: f64 },

    /// The Lambert-W start overflows exp() at double precision.
    #[error("Lambert W start z0={z0} overflows exp() at double precision")]
    StartOverflow { z0: f64 },

    /// The Lambert-W iteration failed to meet its identity tolerance.
    #[error("Lambert W iteration did not converge for argument y={y}")]
    LambertNotConverged { y: f64 },

    /// The certified reference solve failed its own residual bound.
    #[error("reference solve failed certification at Re={re}, rr={rr}")]
    OracleFailure { re: f64, rr: f64 },

    /// A sweep domain specification is malformed.
    #[error("invalid sweep domain: {reason}")]
    InvalidDomain { reason: &'static str },

    /// An aggregate was asked of a sweep carrying the other metric.
    #[error("sweep carries a different metric than the aggregate expects")]
    WrongMetric,

    /// A sweep produced no converged points to aggregate.
    #[error("sweep has no converged points")]
    EmptySweep,

    /// No built-in table carries this number.
    #[error("no built-in table {id}; valid ids are 1-10")]
    UnknownTable { id: u8 },

    /// Writing results to a file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Writing CSV records failed.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
