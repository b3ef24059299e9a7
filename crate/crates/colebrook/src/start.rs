//! Starting-point strategies for the iterative solvers.
//!
//! Three families are supported:
//!
//! * **Traditional** — the rough-law limit of the Colebrook equation,
//!   `x0 = −2·log10(rr/3.7)`, which ignores Re entirely. Cheap, but its λ
//!   error against the true solution can reach ~80% in smooth-flow corners.
//! * **Fixed constants** — single precomputed "center of gravity" values,
//!   one tuned per method family ([`StartStrategy::FixedNewton`],
//!   [`StartStrategy::FixedHalley`], [`StartStrategy::FixedThreePoint`]).
//!   The constants are pinned verbatim; they are not re-derived here.
//! * **Approximation-seeded** — the closed-form Halley-style explicit
//!   approximation evaluated at the flow conditions (see [`crate::approx`]),
//!   accurate to within 10% everywhere in the validated domain.
//!
//! `UserValue` lets callers inject any positive x0 of their own.
//!
//! All functions are pure and thread-safe.

use crate::approx;
use crate::eqn::{FlowConditions, TransmissionFactor};
use crate::Error;

/// How a solver picks its initial transmission-factor iterate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StartStrategy {
    /// Rough-law start `x0 = −2·log10(rr/3.7)`; requires rr > 0.
    Traditional,
    /// Fixed constant 6.44569593948452, tuned for Newton-style iterations.
    FixedNewton,
    /// Fixed constant 7.990256504, tuned for Halley/Schröder iterations.
    FixedHalley,
    /// Fixed constant 7.273124147, tuned for the three-point scheme.
    FixedThreePoint,
    /// Seed from the explicit Halley-form approximation at the given
    /// conditions (within 10% of the true x everywhere in-domain).
    ApproxSeeded,
    /// Caller-chosen start; must be positive.
    UserValue(f64),
}

/// Rough-law starting point `x0 = −2·log10(rr/3.7)`.
///
/// Independent of Re. Errors for rr = 0, where the logarithm diverges;
/// callers solving smooth pipes substitute [`StartStrategy::FixedNewton`]'s
/// constant instead (see [`initial_x`]).
pub fn start_traditional(fc: FlowConditions) -> Result<TransmissionFactor, Error> {
    if fc.rr <= 0.0 {
        return Err(Error::SmoothPipeStart { rr: fc.rr });
    }
    Ok(TransmissionFactor(-2.0 * (fc.rr / 3.7).log10()))
}

/// Looks up the pinned constant for one of the three fixed strategies.
///
/// Errors for any other strategy kind.
pub fn start_fixed(kind: StartStrategy) -> Result<TransmissionFactor, Error> {
    match kind {
        StartStrategy::FixedNewton => Ok(TransmissionFactor(6.44569593948452)),
        StartStrategy::FixedHalley => Ok(TransmissionFactor(7.990256504)),
        StartStrategy::FixedThreePoint => Ok(TransmissionFactor(7.273124147)),
        _ => Err(Error::NotAFixedStart),
    }
}

/// Approximation-seeded start: the Halley-form explicit estimate
/// [`approx::x0_halley`] evaluated at `fc`.
///
/// In-domain this lands within 10% (relative, in both x and λ) of the true
/// solution, so even slow schemes start close.
pub fn start_approx_seeded(fc: FlowConditions) -> TransmissionFactor {
    TransmissionFactor(approx::x0_halley(fc))
}

/// Resolves a strategy to the concrete initial iterate for `fc`.
///
/// This is the single entry point the solver layer uses. Two fallbacks are
/// built in:
///
/// * `Traditional` with rr = 0 silently substitutes the FixedNewton
///   constant (the rough law has no smooth-pipe limit, and the fixed point
///   was designed for exactly that slow region);
/// * `UserValue` rejects non-positive values.
pub fn initial_x(kind: StartStrategy, fc: FlowConditions) -> Result<TransmissionFactor, Error> {
    match kind {
        StartStrategy::Traditional => {
            if fc.rr <= 0.0 {
                start_fixed(StartStrategy::FixedNewton)
            } else {
                start_traditional(fc)
            }
        }
        StartStrategy::FixedNewton
        | StartStrategy::FixedHalley
        | StartStrategy::FixedThreePoint => start_fixed(kind),
        StartStrategy::ApproxSeeded => Ok(start_approx_seeded(fc)),
        StartStrategy::UserValue(x0) => {
            if x0 > 0.0 && x0.is_finite() {
                Ok(TransmissionFactor(x0))
            } else {
                Err(Error::NotPositive {
                    what: "user starting point",
                    value: x0,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eqn::lambda_from_x;

    #[test]
    fn traditional_matches_tabled_values() {
        let fc = FlowConditions::new(5e6, 2.5e-5);
        let x0 = start_traditional(fc).unwrap().0;
        assert!((x0 - 10.34052343).abs() < 5e-9);
        assert!((lambda_from_x(TransmissionFactor(x0)).unwrap().0 - 0.009352225155363).abs() < 1e-13);

        let fc = FlowConditions::new(3e4, 9e-3);
        let x0 = start_traditional(fc).unwrap().0;
        assert!((x0 - 5.227918429).abs() < 5e-10);
        assert!((lambda_from_x(TransmissionFactor(x0)).unwrap().0 - 0.036588313752304).abs() < 1e-13);

        // Log argument exactly 1 ⇒ zero start (outside physics, fine math).
        assert_eq!(start_traditional(FlowConditions::new(1e6, 3.7)).unwrap().0, 0.0);
    }

    #[test]
    fn traditional_ignores_re() {
        let a = start_traditional(FlowConditions::new(4000.0, 1e-3)).unwrap();
        let b = start_traditional(FlowConditions::new(1e8, 1e-3)).unwrap();
        assert_eq!(a.0, b.0);
    }

    #[test]
    fn traditional_rejects_smooth_pipe() {
        assert!(start_traditional(FlowConditions::new(5e6, 0.0)).is_err());
    }

    #[test]
    fn fixed_constants_are_pinned() {
        assert_eq!(start_fixed(StartStrategy::FixedNewton).unwrap().0, 6.44569593948452);
        assert_eq!(start_fixed(StartStrategy::FixedHalley).unwrap().0, 7.990256504);
        assert_eq!(start_fixed(StartStrategy::FixedThreePoint).unwrap().0, 7.273124147);
        assert!(start_fixed(StartStrategy::Traditional).is_err());
        assert!(start_fixed(StartStrategy::ApproxSeeded).is_err());
        assert!(start_fixed(StartStrategy::UserValue(5.0)).is_err());
    }

    #[test]
    fn fixed_constants_map_to_quoted_friction_factors() {
        let lam = lambda_from_x(start_fixed(StartStrategy::FixedNewton).unwrap()).unwrap();
        assert!((lam.0 - 0.024069128765101).abs() < 1e-15);
        let lam = lambda_from_x(start_fixed(StartStrategy::FixedHalley).unwrap()).unwrap();
        assert!((lam.0 - 0.015663130177332).abs() < 1e-14);
        let lam = lambda_from_x(start_fixed(StartStrategy::FixedThreePoint).unwrap()).unwrap();
        assert!((lam.0 - 0.018904186732731).abs() < 1e-14);
    }

    #[test]
    fn approx_seeded_is_close_to_reference_roots() {
        // Reference x for the two standard cases plus a domain corner.
        for &(re, rr, x_ref) in &[
            (5e6, 2.5e-5, 9.863034564455800),
            (3e4, 9e-3, 5.087840573092420),
        ] {
            let x0 = start_approx_seeded(FlowConditions::new(re, rr)).0;
            assert!(
                ((x0 - x_ref) / x_ref).abs() < 0.10,
                "seed {x0} too far from {x_ref}"
            );
        }
    }

    #[test]
    fn initial_x_substitutes_fixed_newton_for_smooth_pipe() {
        let fc = FlowConditions::new(5e6, 0.0);
        let x0 = initial_x(StartStrategy::Traditional, fc).unwrap();
        assert_eq!(x0.0, 6.44569593948452);
    }

    #[test]
    fn initial_x_validates_user_values() {
        let fc = FlowConditions::new(5e6, 2.5e-5);
        assert_eq!(initial_x(StartStrategy::UserValue(9.5), fc).unwrap().0, 9.5);
        assert!(initial_x(StartStrategy::UserValue(0.0), fc).is_err());
        assert!(initial_x(StartStrategy::UserValue(-1.0), fc).is_err());
        assert!(initial_x(StartStrategy::UserValue(f64::NAN), fc).is_err());
    }
}
