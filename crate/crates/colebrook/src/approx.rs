//! Explicit closed-form approximations of the Colebrook friction factor.
//!
//! The family is built from one linearization about the expansion point
//! x = 8 plus optional fixed-point polish:
//!
//! 1. **Intermediates** A, B, C, ∇ ([`approx_intermediates`]):
//!
//!    ```text
//!    A = 8 + 2·log10(16/Re + rr/3.7)
//!    ∇ = 74205.5 + 1000·rr·Re
//!    B = −74914381.46 / ∇²          (a curvature term, always negative)
//!    C = 1391459721232.67 / ∇³      (a third-order term, always positive)
//!    ```
//!
//!    The decimal constants are stored verbatim. They are rounded renderings
//!    of exact derivative scalings — B matches `f″` and C matches `f‴` of
//!    [`crate::eqn::residual_x`] evaluated at the Halley fixed start — and a
//!    test pins that agreement to six significant digits.
//!
//! 2. **One-shot estimates** ([`approx_x0`]): three algebraic forms of one
//!    corrected step from x = 8, labelled by the iteration family they
//!    mirror (Halley, Schröder, third-order Householder). All three agree
//!    within 1% of each other in-domain; the Halley form is the default and
//!    carries the documented error bound (max λ error 8.29% over the
//!    validated domain).
//!
//! 3. **Acceleration** ([`approx_accelerate`]): each extra stage applies the
//!    fixed-point map `x ← −2·log10(2.51·x/Re + rr/3.7)` once, buying
//!    roughly two orders of magnitude of accuracy per logarithm.
//!
//! [`approx_friction`] composes the Halley form with `level` accelerations
//! and converts to λ. Level k costs exactly k+1 logarithm evaluations in
//! total — one inside A, one per acceleration — which
//! [`approx_friction_instrumented`] exposes for verification.

use crate::eqn::{FlowConditions, FrictionFactor, TransmissionFactor};
use crate::Error;

/// Which algebraic form of the one-shot estimate to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxVariant {
    /// `x0 = 8 − 2A/(2 − A·B)` — default, documented 8.29% λ bound.
    Halley,
    /// `x0 = 8 − A − A²·B/2`.
    Schroder,
    /// `x0 = 8 − (6A − 3A²B)/(6 − 6AB + A²C)`.
    Householder3,
}

/// The intermediates and staged estimates of one approximation evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxBundle {
    /// Residual-like term A at the expansion point.
    pub a: f64,
    /// Curvature term B (negative).
    pub b: f64,
    /// Third-order term C (positive).
    pub c: f64,
    /// Shared denominator ∇ = 74205.5 + 1000·rr·Re.
    pub nabla: f64,
    /// x after the one-shot estimate and after each acceleration stage
    /// (empty when only intermediates were requested).
    pub x_stage: Vec<f64>,
}

/// Counts one log10 evaluation into `logs` and returns the logarithm.
#[inline]
fn log10_counted(v: f64, logs: &mut usize) -> f64 {
    *logs += 1;
    v.log10()
}

/// A, B, C, ∇ with the literal published constants; counts A's logarithm.
fn intermediates_counted(fc: FlowConditions, logs: &mut usize) -> (f64, f64, f64, f64) {
    let a = 8.0 + 2.0 * log10_counted(16.0 / fc.re + fc.rr / 3.7, logs);
    let nabla = 74205.5 + 1000.0 * fc.rr * fc.re;
    let b = -74914381.46 / (nabla * nabla);
    let c = 1391459721232.67 / (nabla * nabla * nabla);
    (a, b, c, nabla)
}

/// Computes the A/B/C/∇ intermediates for `fc` (no x stages).
pub fn approx_intermediates(fc: FlowConditions) -> ApproxBundle {
    let mut logs = 0;
    let (a, b, c, nabla) = intermediates_counted(fc, &mut logs);
    ApproxBundle {
        a,
        b,
        c,
        nabla,
        x_stage: Vec::new(),
    }
}

/// One-shot x estimate from precomputed intermediates.
fn x0_from_intermediates(a: f64, b: f64, c: f64, variant: ApproxVariant) -> Result<f64, Error> {
    match variant {
        ApproxVariant::Halley => {
            let den = 2.0 - a * b;
            if den == 0.0 {
                return Err(Error::SingularStep { at: 8.0 });
            }
            Ok(8.0 - 2.0 * a / den)
        }
        ApproxVariant::Schroder => Ok(8.0 - a - a * a * b / 2.0),
        ApproxVariant::Householder3 => {
            let den = 6.0 - 6.0 * a * b + a * a * c;
            if den == 0.0 {
                return Err(Error::SingularStep { at: 8.0 });
            }
            Ok(8.0 - (6.0 * a - 3.0 * a * a * b) / den)
        }
    }
}

/// One-shot explicit x estimate at `fc` in the requested variant.
///
/// The denominators of the Halley and third-order forms stay bounded away
/// from zero in-domain; the guard only fires for pathological inputs.
pub fn approx_x0(fc: FlowConditions, variant: ApproxVariant) -> Result<TransmissionFactor, Error> {
    let mut logs = 0;
    let (a, b, c, _) = intermediates_counted(fc, &mut logs);
    Ok(TransmissionFactor(x0_from_intermediates(a, b, c, variant)?))
}

/// Halley-form one-shot estimate as a plain value (the seed the
/// starting-point layer uses; infallible in-domain).
pub(crate) fn x0_halley(fc: FlowConditions) -> f64 {
    approx_x0(fc, ApproxVariant::Halley)
        .expect("Halley-form denominator is bounded away from zero")
        .0
}

/// One acceleration stage; counts its logarithm.
fn accelerate_once_counted(fc: FlowConditions, x: f64, logs: &mut usize) -> Result<f64, Error> {
    let arg = 2.51 * x / fc.re + fc.rr / 3.7;
    if arg <= 0.0 {
        return Err(Error::LogArgument { arg });
    }
    Ok(-2.0 * log10_counted(arg, logs))
}

/// Applies the fixed-point map `x ← −2·log10(2.51·x/Re + rr/3.7)` exactly
/// `stages` times. `stages = 0` returns x unchanged.
pub fn approx_accelerate(
    fc: FlowConditions,
    x: f64,
    stages: u32,
) -> Result<TransmissionFactor, Error> {
    let mut logs = 0;
    let mut cur = x;
    for _ in 0..stages {
        cur = accelerate_once_counted(fc, cur, &mut logs)?;
    }
    Ok(TransmissionFactor(cur))
}

/// Friction factor from the Halley-form estimate plus `level` acceleration
/// stages. Levels 0/1/2 are the documented ladder; higher levels keep
/// polishing at one extra logarithm each.
pub fn approx_friction(fc: FlowConditions, level: u32) -> Result<FrictionFactor, Error> {
    approx_friction_instrumented(fc, level).map(|(lam, _)| lam)
}

/// Like [`approx_friction`] but also reports how many log10 evaluations the
/// whole composition used (level k ⇒ exactly k+1).
pub fn approx_friction_instrumented(
    fc: FlowConditions,
    level: u32,
) -> Result<(FrictionFactor, usize), Error> {
    let mut logs = 0;
    let (a, b, c, _) = intermediates_counted(fc, &mut logs);
    let mut x = x0_from_intermediates(a, b, c, ApproxVariant::Halley)?;
    for _ in 0..level {
        x = accelerate_once_counted(fc, x, &mut logs)?;
    }
    Ok((crate::eqn::lambda_from_x(TransmissionFactor(x))?, logs))
}

/// Full evaluation record: intermediates plus x after the one-shot estimate
/// and after each of `stages` accelerations (`x_stage` has `stages + 1`
/// entries). This is what the CLI prints.
pub fn approx_bundle(
    fc: FlowConditions,
    variant: ApproxVariant,
    stages: u32,
) -> Result<ApproxBundle, Error> {
    let mut logs = 0;
    let (a, b, c, nabla) = intermediates_counted(fc, &mut logs);
    let mut x = x0_from_intermediates(a, b, c, variant)?;
    let mut x_stage = vec![x];
    for _ in 0..stages {
        x = accelerate_once_counted(fc, x, &mut logs)?;
        x_stage.push(x);
    }
    Ok(ApproxBundle {
        a,
        b,
        c,
        nabla,
        x_stage,
    })
}
