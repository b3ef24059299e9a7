//! Colebrook residual functions and their derivatives.
//!
//! The Colebrook–White equation for the Darcy friction factor λ,
//!
//! ```text
//! 1/√λ = −2·log10( 2.51/(Re·√λ) + rr/3.7 )
//! ```
//!
//! is treated as a root-finding problem in two equivalent forms:
//!
//! * **λ-space**: `f(λ) = 1/√|λ| + 2·log10(2.51/(Re·√|λ|) + rr/3.7)`.
//!   The absolute value lets iterations survive a transient negative iterate
//!   (a fixed far-away start can produce one) instead of failing on √ of a
//!   negative number.
//! * **x-space**: with the transmission factor `x = 1/√λ`,
//!   `f(x) = x + 2·log10(2.51·x/Re + rr/3.7)`. This near-linearizes the
//!   problem: `f′(x)` stays barely above 1 over the whole domain, which is
//!   why x-space iterations converge in a handful of steps.
//!
//! All derivatives are closed-form. The x-space prefactors are kept exact —
//! `f″` carries −2·2.51² and `f‴` carries 4·2.51³ — rather than the rounded
//! decimals −12.6 and 63.253 sometimes quoted for them; the rounded forms are
//! off in the 8th significant digit. Equivalent integer-coefficient forms
//! (obtained by scaling with 3700·Re) are provided as cross-checks:
//! with `d = 9287·x + 1000·rr·Re`,
//!
//! ```text
//! f′(x) = (ln10·d + 18574) / (ln10·d)
//! f″(x) = −172496738 / (ln10·d²)
//! f‴(x) = 3203954411612 / (ln10·d³)
//! ```
//!
//! Everything here is a pure function of its arguments; calls are safe from
//! any number of threads.

use crate::Error;
use std::f64::consts::LN_10;

/// One Colebrook instance: a Reynolds number / relative roughness pair.
///
/// The validated domain is `4000 ≤ re ≤ 1e8`, `0 ≤ rr ≤ 0.05`. The
/// constructor accepts wider values so sweeps can probe boundary behavior;
/// [`FlowConditions::in_domain`] reports whether a pair is inside the
/// validated box, and solvers reject out-of-domain pairs only when their
/// config asks for strict checking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowConditions {
    /// Reynolds number (dimensionless).
    pub re: f64,
    /// Relative roughness ε/D (dimensionless).
    pub rr: f64,
}

impl FlowConditions {
    /// Builds a condition pair without domain restriction.
    pub fn new(re: f64, rr: f64) -> Self {
        FlowConditions { re, rr }
    }

    /// True when the pair lies in the validated Colebrook domain
    /// (`4000 ≤ re ≤ 1e8`, `0 ≤ rr ≤ 0.05`).
    pub fn in_domain(&self) -> bool {
        (4000.0..=1e8).contains(&self.re) && (0.0..=0.05).contains(&self.rr)
    }
}

/// Darcy friction factor λ. Converged in-domain solves land in roughly
/// `[0.006, 0.08]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FrictionFactor(pub f64);

impl FrictionFactor {
    /// The plain numeric value.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Transmission factor `x = 1/√λ`, the working variable of the fast
/// iteration schemes.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TransmissionFactor(pub f64);

impl TransmissionFactor {
    /// The plain numeric value.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Converts a friction factor to its transmission factor `x = 1/√λ`.
///
/// Errors when λ is not positive.
pub fn x_from_lambda(lam: FrictionFactor) -> Result<TransmissionFactor, Error> {
    if lam.0 <= 0.0 {
        return Err(Error::NotPositive {
            what: "friction factor",
            value: lam.0,
        });
    }
    Ok(TransmissionFactor(1.0 / lam.0.sqrt()))
}

/// Converts a transmission factor back to the friction factor `λ = x⁻²`.
///
/// Exact inverse of [`x_from_lambda`] up to floating-point round-off
/// (round-trip relative error ≤ 1e-15). Errors when x is not positive.
pub fn lambda_from_x(x: TransmissionFactor) -> Result<FrictionFactor, Error> {
    if x.0 <= 0.0 {
        return Err(Error::NotPositive {
            what: "transmission factor",
            value: x.0,
        });
    }
    Ok(FrictionFactor(1.0 / (x.0 * x.0)))
}

/// λ-space residual `f(λ) = 1/√|λ| + 2·log10(2.51/(Re·√|λ|) + rr/3.7)`.
///
/// Zero exactly when λ solves the Colebrook equation. The |λ| guard is
/// deliberate: direct-λ Newton from a distant start can step negative once
/// and still recover. Errors at λ = 0 where the residual is singular.
pub fn residual_lambda(lam: f64, fc: FlowConditions) -> Result<f64, Error> {
    if lam == 0.0 {
        return Err(Error::ZeroFriction);
    }
    let s = lam.abs().sqrt();
    Ok(1.0 / s + 2.0 * (2.51 / (fc.re * s) + fc.rr / 3.7).log10())
}

/// First derivative of [`residual_lambda`] with respect to λ:
///
/// ```text
/// f′(λ) = −(1/2)·(1/√|λ|)³ · (1 + 2·2.51/(ln10·Re·(2.51/(Re·√|λ|) + rr/3.7)))
/// ```
///
/// Always negative on the admissible set. Errors at λ = 0.
pub fn residual_lambda_prime(lam: f64, fc: FlowConditions) -> Result<f64, Error> {
    if lam == 0.0 {
        return Err(Error::ZeroFriction);
    }
    let inv_s = 1.0 / lam.abs().sqrt();
    let u = 2.51 * inv_s / fc.re + fc.rr / 3.7;
    Ok(-0.5 * inv_s.powi(3) * (1.0 + 2.0 * 2.51 / (LN_10 * fc.re * u)))
}

/// Inner logarithm argument of the x-space residual:
/// `u(x) = 2.51·x/Re + rr/3.7`.
#[inline]
fn log_arg(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    let u = 2.51 * x / fc.re + fc.rr / 3.7;
    if u <= 0.0 {
        return Err(Error::LogArgument { arg: u });
    }
    Ok(u)
}

/// x-space residual `f(x) = x + 2·log10(2.51·x/Re + rr/3.7)`.
///
/// Strictly increasing in x (its derivative exceeds 1), so the root is
/// unique. Errors when the logarithm argument is not positive.
pub fn residual_x(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    let u = log_arg(x, fc)?;
    Ok(x + 2.0 * u.log10())
}

/// First derivative `f′(x) = 1 + 2·(2.51/(Re·ln10)) / (rr/3.7 + 2.51·x/Re)`.
///
/// Always strictly greater than 1 in-domain, which rules out singular
/// Newton steps in x-space.
pub fn residual_x_prime(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    let u = log_arg(x, fc)?;
    Ok(1.0 + 2.0 * (2.51 / (fc.re * LN_10)) / u)
}

/// Second derivative `f″(x) = −2·2.51² / (Re²·ln10·u²)` with
/// `u = rr/3.7 + 2.51·x/Re`. Always negative.
///
/// The prefactor is the exact −2·2.51² = −12.6002; see the module docs for
/// why the rounded −12.6 is not used.
pub fn residual_x_second(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    let u = log_arg(x, fc)?;
    let r = 2.51 / fc.re;
    Ok(-2.0 * r * r / (LN_10 * u * u))
}

/// Third derivative `f‴(x) = 4·2.51³ / (Re³·ln10·u³)`. Always positive.
///
/// Exact prefactor 4·2.51³ = 63.253004.
pub fn residual_x_third(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    let u = log_arg(x, fc)?;
    let r = 2.51 / fc.re;
    Ok(4.0 * r * r * r / (LN_10 * u * u * u))
}

/// Scaled denominator of the integer-coefficient derivative forms:
/// `d = 9287·x + 1000·rr·Re` (equals `3700·Re·u(x)`).
#[inline]
fn scaled_denominator(x: f64, fc: FlowConditions) -> f64 {
    9287.0 * x + 1000.0 * fc.rr * fc.re
}

/// Integer-coefficient form of the first derivative,
/// `f′(x) = (9287·ln10·x + 1000·ln10·rr·Re + 18574) / (ln10·d)`.
///
/// Cross-check variant only: agrees with [`residual_x_prime`] to relative
/// 1e-14; the analytic form is canonical.
pub fn residual_x_prime_symbolic(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    log_arg(x, fc)?;
    let d = scaled_denominator(x, fc);
    Ok((LN_10 * d + 18574.0) / (LN_10 * d))
}

/// Integer-coefficient form of the second derivative,
/// `f″(x) = −172496738 / (ln10·d²)`. Cross-check variant only.
pub fn residual_x_second_symbolic(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    log_arg(x, fc)?;
    let d = scaled_denominator(x, fc);
    Ok(-172_496_738.0 / (LN_10 * d * d))
}

/// Integer-coefficient form of the third derivative,
/// `f‴(x) = 3203954411612 / (ln10·d³)`. Cross-check variant only.
pub fn residual_x_third_symbolic(x: f64, fc: FlowConditions) -> Result<f64, Error> {
    log_arg(x, fc)?;
    let d = scaled_denominator(x, fc);
    Ok(3_203_954_411_612.0 / (LN_10 * d * d * d))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASE1: FlowConditions = FlowConditions { re: 5e6, rr: 2.5e-5 };
    const CASE2: FlowConditions = FlowConditions { re: 3e4, rr: 9e-3 };

    /// Reference roots of the two standard test conditions.
    const LAM1: f64 = 0.010279663295529;
    const LAM2: f64 = 0.038630738574792;
    const X1: f64 = 9.863034564455800;
    const X2: f64 = 5.087840573092420;

    #[test]
    fn conversions_reproduce_reference_pairs() {
        assert_eq!(x_from_lambda(FrictionFactor(1.0)).unwrap().0, 1.0);
        assert!((x_from_lambda(FrictionFactor(LAM1)).unwrap().0 - X1).abs() < 1e-12);
        assert!((x_from_lambda(FrictionFactor(LAM2)).unwrap().0 - X2).abs() < 1e-12);
        assert!((lambda_from_x(TransmissionFactor(X1)).unwrap().0 - LAM1).abs() < 1e-14);
        // The rounded fixed start maps to the λ its own rounding implies.
        let lam0 = lambda_from_x(TransmissionFactor(6.445695939)).unwrap().0;
        assert!((lam0 - 0.024069128768719).abs() < 1e-13);
    }

    #[test]
    fn conversions_reject_non_positive() {
        assert!(x_from_lambda(FrictionFactor(0.0)).is_err());
        assert!(x_from_lambda(FrictionFactor(-0.01)).is_err());
        assert!(lambda_from_x(TransmissionFactor(0.0)).is_err());
    }

    #[test]
    fn round_trip_is_tight() {
        for &lam in &[0.006, 0.0123456789, 0.05, 0.08, 1.0] {
            let back = lambda_from_x(x_from_lambda(FrictionFactor(lam)).unwrap())
                .unwrap()
                .0;
            assert!((back - lam).abs() <= 1e-15 * lam);
        }
    }

    #[test]
    fn lambda_residual_matches_tabled_values() {
        // Worked-example cells are printed to 9 decimals.
        let f = residual_lambda(0.009352225155363, CASE1).unwrap();
        assert!((f - 0.495092014).abs() < 1e-9);
        let f = residual_lambda(0.024069128765101, CASE2).unwrap();
        assert!((f - 1.391712394).abs() < 1e-9);
        // At the root the residual vanishes to printed precision.
        assert!(residual_lambda(LAM1, CASE1).unwrap().abs() < 1e-9);
        assert!(residual_lambda(LAM2, CASE2).unwrap().abs() < 1e-9);
    }

    #[test]
    fn lambda_residual_guards_negative_iterates() {
        // A transient negative iterate must evaluate through |λ|.
        let f = residual_lambda(-0.001370207567104, CASE1).unwrap();
        assert!(f.is_finite());
        assert_eq!(
            f,
            residual_lambda(0.001370207567104, CASE1).unwrap(),
            "guard must make f even in λ"
        );
        assert!(residual_lambda(0.0, CASE1).is_err());
    }

    #[test]
    fn lambda_derivative_matches_tabled_values() {
        let fp = residual_lambda_prime(0.009352225155363, CASE1).unwrap();
        assert!((fp - (-573.0134258)).abs() < 5e-7);
        let fp = residual_lambda_prime(LAM1, CASE1).unwrap();
        assert!((fp - (-497.6016898)).abs() < 5e-7);
        assert!(residual_lambda_prime(0.0, CASE1).is_err());
    }

    #[test]
    fn lambda_derivative_matches_finite_difference() {
        for &(lam, fc) in &[(0.01, CASE1), (0.02, CASE1), (0.0386, CASE2), (0.05, CASE2)] {
            let h = 1e-7 * lam;
            let fd = (residual_lambda(lam + h, fc).unwrap()
                - residual_lambda(lam - h, fc).unwrap())
                / (2.0 * h);
            let an = residual_lambda_prime(lam, fc).unwrap();
            assert!(
                ((fd - an) / an).abs() < 1e-5,
                "fd {fd} vs analytic {an} at λ={lam}"
            );
        }
    }

    #[test]
    fn x_residual_matches_tabled_values() {
        assert!((residual_x(6.445695939, CASE1).unwrap() - (-3.554956085)).abs() < 1e-9);
        assert!((residual_x(10.34052343, CASE1).unwrap() - 0.495092014).abs() < 1e-9);
        assert!((residual_x(7.990256504, CASE2).unwrap() - 2.973246188).abs() < 1e-9);
    }

    #[test]
    fn x_derivatives_match_tabled_values() {
        assert!((residual_x_prime(6.445695939, CASE1).unwrap() - 1.043635910).abs() < 5e-10);
        assert!((residual_x_prime(10.34052343, CASE1).unwrap() - 1.036495031).abs() < 5e-10);
        assert!((residual_x_prime(7.990256504, CASE2).unwrap() - 1.023435376).abs() < 5e-10);
        assert!((residual_x_second(X1, CASE1).unwrap() - (-0.001596821)).abs() < 5e-10);
        assert!((residual_x_second(7.990256504, CASE2).unwrap() - (-0.000632309)).abs() < 5e-10);
        assert!((residual_x_third(X1, CASE1).unwrap() - 0.000136933).abs() < 5e-10);
        assert!((residual_x_third(X2, CASE2).unwrap() - 0.000043578).abs() < 5e-10);
    }

    #[test]
    fn x_derivative_chain_matches_finite_differences() {
        for &(x, fc) in &[(5.0, CASE2), (6.5, CASE1), (8.0, CASE1), (10.0, CASE1)] {
            let h = 1e-6 * x;
            let fd1 =
                (residual_x(x + h, fc).unwrap() - residual_x(x - h, fc).unwrap()) / (2.0 * h);
            let an1 = residual_x_prime(x, fc).unwrap();
            assert!(((fd1 - an1) / an1).abs() < 1e-5);

            let fd2 = (residual_x_prime(x + h, fc).unwrap()
                - residual_x_prime(x - h, fc).unwrap())
                / (2.0 * h);
            let an2 = residual_x_second(x, fc).unwrap();
            assert!(((fd2 - an2) / an2).abs() < 1e-5);

            let fd3 = (residual_x_second(x + h, fc).unwrap()
                - residual_x_second(x - h, fc).unwrap())
                / (2.0 * h);
            let an3 = residual_x_third(x, fc).unwrap();
            assert!(((fd3 - an3) / an3).abs() < 1e-4);
        }
    }

    #[test]
    fn sign_structure_holds() {
        for &fc in &[CASE1, CASE2, FlowConditions::new(4000.0, 0.05)] {
            for &x in &[3.0, 5.0, 8.0, 12.0] {
                assert!(residual_x_prime(x, fc).unwrap() > 1.0);
                assert!(residual_x_second(x, fc).unwrap() < 0.0);
                assert!(residual_x_third(x, fc).unwrap() > 0.0);
                assert!(residual_lambda_prime(1.0 / (x * x), fc).unwrap() < 0.0);
            }
        }
    }

    #[test]
    fn symbolic_forms_agree_with_analytic() {
        for &fc in &[CASE1, CASE2, FlowConditions::new(4000.0, 1e-7)] {
            for &x in &[3.0, 5.0877, 6.4457, 7.9903, 9.8630, 12.0] {
                let p = residual_x_prime(x, fc).unwrap();
                let ps = residual_x_prime_symbolic(x, fc).unwrap();
                assert!(((p - ps) / p).abs() < 1e-14);
                let s = residual_x_second(x, fc).unwrap();
                let ss = residual_x_second_symbolic(x, fc).unwrap();
                assert!(((s - ss) / s).abs() < 1e-12);
                let t = residual_x_third(x, fc).unwrap();
                let ts = residual_x_third_symbolic(x, fc).unwrap();
                assert!(((t - ts) / t).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn spaces_share_the_same_root() {
        // The x-space root written back into λ-space roots the λ residual,
        // and vice versa.
        assert!(residual_lambda(1.0 / (X1 * X1), CASE1).unwrap().abs() < 1e-10);
        assert!(residual_x(1.0 / LAM2.sqrt(), CASE2).unwrap().abs() < 1e-10);
    }

    #[test]
    fn domain_flags() {
        assert!(FlowConditions::new(5e6, 2.5e-5).in_domain());
        assert!(FlowConditions::new(4000.0, 0.0).in_domain());
        assert!(FlowConditions::new(1e8, 0.05).in_domain());
        assert!(!FlowConditions::new(3999.0, 0.01).in_domain());
        assert!(!FlowConditions::new(5e6, 0.051).in_domain());
        assert!(!FlowConditions::new(2e8, 0.01).in_domain());
    }
}
