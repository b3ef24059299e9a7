//! Domain sweeps: iteration-count maps and relative-error maps.
//!
//! A [`DomainSpec`] names a rectangle of the (Re, rr) plane, an axis scale,
//! and a sampler — either the deterministic 2-d Sobol sequence or an
//! inclusive tensor grid. [`iteration_map`] runs one solver configuration
//! at every sampled point and records converged iteration counts;
//! [`error_map`] measures an estimator's relative λ error in percent
//! against [`solve_reference`]. Both report the domain maximum, where it
//! occurs, and how many points failed to converge (failures carry a NaN
//! sentinel metric and are never folded into maxima or means).
//!
//! Point evaluation is embarrassingly parallel and runs on the current
//! rayon pool. Results are reproducible to the byte: the point order is the
//! sampler's order regardless of worker count, aggregation happens
//! sequentially afterwards, and max/argmax ties resolve to the lowest
//! point index. CSV (`re,rr,metric`, 17 significant digits) and a JSON
//! summary are the machine-readable outputs.

use crate::approx::approx_friction;
use crate::eqn::FlowConditions;
use crate::lambertw::{colebrook_via_lambert, WMethod, DEFAULT_W_TOL};
use crate::sobol::sobol_2d;
use crate::solver::{solve, solve_reference, Method, SolverConfig};
use crate::start::{start_approx_seeded, start_traditional, StartStrategy};
use crate::Error;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// How a unit interval maps onto an axis range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Log10-uniform (the default; matches the map figures' axes).
    Log10,
    /// Linear-uniform, for bounds quoted on evenly spaced samples.
    Linear,
}

/// Point sampler for the domain rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// First n points of the 2-d Sobol sequence.
    Sobol {
        /// Number of points (≥ 2).
        n: usize,
    },
    /// Inclusive nx×ny tensor grid, Re-major order.
    Grid {
        /// Points along Re (≥ 2).
        nx: usize,
        /// Points along rr (≥ 2).
        ny: usize,
    },
}

/// A sampled rectangle of the (Re, rr) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainSpec {
    /// Reynolds-number range (lo, hi).
    pub re_range: (f64, f64),
    /// Relative-roughness range (lo, hi); lo must stay positive.
    pub rr_range: (f64, f64),
    /// Axis scaling for both axes.
    pub scale: Scale,
    /// Point sampler.
    pub sampler: Sampler,
}

impl Default for DomainSpec {
    /// The standard map domain: Re ∈ [4000, 1e8], rr ∈ [1e-7, 0.05],
    /// log-scaled, 65536 Sobol points.
    fn default() -> Self {
        DomainSpec {
            re_range: (4000.0, 1e8),
            rr_range: (1e-7, 0.05),
            scale: Scale::Log10,
            sampler: Sampler::Sobol { n: 65536 },
        }
    }
}

impl DomainSpec {
    fn validate(&self) -> Result<(), Error> {
        let (relo, rehi) = self.re_range;
        let (rrlo, rrhi) = self.rr_range;
        if !(relo.is_finite() && rehi.is_finite() && relo > 0.0 && relo < rehi) {
            return Err(Error::InvalidDomain {
                reason: "re_range must be finite, positive, and increasing",
            });
        }
        if !(rrlo.is_finite() && rrhi.is_finite() && rrlo > 0.0 && rrlo < rrhi) {
            return Err(Error::InvalidDomain {
                reason: "rr_range must be finite, positive, and increasing",
            });
        }
        match self.sampler {
            Sampler::Sobol { n } if n < 2 => Err(Error::InvalidDomain {
                reason: "Sobol sampler needs at least 2 points",
            }),
            Sampler::Grid { nx, ny } if nx < 2 || ny < 2 => Err(Error::InvalidDomain {
                reason: "grid sampler needs at least 2 points per axis",
            }),
            _ => Ok(()),
        }
    }
}

/// One axis's unit-interval-to-range map, endpoint-exact for grids.
struct Axis {
    lo: f64,
    hi: f64,
    scale: Scale,
}

impl Axis {
    fn at(&self, u: f64) -> f64 {
        match self.scale {
            Scale::Log10 => {
                let (llo, lhi) = (self.lo.log10(), self.hi.log10());
                10f64.powf(llo + (lhi - llo) * u)
            }
            Scale::Linear => self.lo + (self.hi - self.lo) * u,
        }
    }

    /// Grid node i of n: endpoints are returned exactly.
    fn node(&self, i: usize, n: usize) -> f64 {
        if i == 0 {
            self.lo
        } else if i == n - 1 {
            self.hi
        } else {
            self.at(i as f64 / (n - 1) as f64)
        }
    }
}

/// Expands a domain spec into its concrete sample points.
pub fn materialize(spec: &DomainSpec) -> Result<Vec<FlowConditions>, Error> {
    spec.validate()?;
    let re_axis = Axis {
        lo: spec.re_range.0,
        hi: spec.re_range.1,
        scale: spec.scale,
    };
    let rr_axis = Axis {
        lo: spec.rr_range.0,
        hi: spec.rr_range.1,
        scale: spec.scale,
    };
    Ok(match spec.sampler {
        Sampler::Sobol { n } => sobol_2d(n)
            .into_iter()
            .map(|(u, v)| FlowConditions::new(re_axis.at(u), rr_axis.at(v)))
            .collect(),
        Sampler::Grid { nx, ny } => {
            let mut out = Vec::with_capacity(nx * ny);
            for i in 0..nx {
                let re = re_axis.node(i, nx);
                for j in 0..ny {
                    out.push(FlowConditions::new(re, rr_axis.node(j, ny)));
                }
            }
            out
        }
    })
}

/// What a sweep's metric measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    /// Converged iteration count of a solver configuration.
    IterationCount,
    /// 100·|λ_est − λ_ref|/λ_ref against the reference solver.
    RelativeErrorPct,
}

impl MetricKind {
    /// Stable machine name used in the JSON summary.
    pub fn name(self) -> &'static str {
        match self {
            MetricKind::IterationCount => "iteration_count",
            MetricKind::RelativeErrorPct => "relative_error_pct",
        }
    }
}

/// One completed sweep: every sampled point with its metric (NaN for
/// non-converged points), plus the converged maximum and where it occurs.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Sampled conditions with metrics, in sampler order.
    pub points: Vec<(FlowConditions, f64)>,
    /// What the metric measures.
    pub metric_kind: MetricKind,
    /// Maximum metric over converged points.
    pub max_value: f64,
    /// Conditions attaining the maximum (lowest index on ties).
    pub argmax: FlowConditions,
    /// Number of NaN-sentinel (non-converged) points.
    pub n_nonconverged: usize,
}

/// Sequential reduction shared by both map builders.
fn reduce(
    points: Vec<(FlowConditions, f64)>,
    metric_kind: MetricKind,
) -> Result<SweepResult, Error> {
    let mut best: Option<(FlowConditions, f64)> = None;
    let mut n_nonconverged = 0usize;
    for &(fc, m) in &points {
        if !m.is_finite() {
            n_nonconverged += 1;
            continue;
        }
        match best {
            Some((_, cur)) if m <= cur => {}
            _ => best = Some((fc, m)),
        }
    }
    let (argmax, max_value) = best.ok_or(Error::EmptySweep)?;
    Ok(SweepResult {
        points,
        metric_kind,
        max_value,
        argmax,
        n_nonconverged,
    })
}

/// Builds the iteration-count map of one solver configuration.
///
/// Non-converged points (and solver errors, which cannot occur in-domain)
/// become NaN sentinels counted in `n_nonconverged`.
pub fn iteration_map(
    method: Method,
    start: StartStrategy,
    spec: &DomainSpec,
    tol: f64,
) -> Result<SweepResult, Error> {
    let conditions = materialize(spec)?;
    let mut cfg = SolverConfig::new(method).with_start(start);
    cfg.tolerance = tol;
    let points: Vec<(FlowConditions, f64)> = conditions
        .into_par_iter()
        .map(|fc| {
            let metric = match solve(fc, &cfg) {
                Ok(t) if t.converged => t.iterations as f64,
                _ => f64::NAN,
            };
            (fc, metric)
        })
        .collect();
    reduce(points, MetricKind::IterationCount)
}

/// Which λ estimate an error map measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    /// Closed-form approximation at acceleration level 0, 1, or 2.
    ApproxLevel(u32),
    /// The rough-law starting value taken as the answer.
    TraditionalStart,
    /// The approximation-seeded starting value taken as the answer.
    ApproxSeededStart,
    /// The Lambert-W closed form.
    LambertForm,
}

/// Builds the relative-error map (percent) of an estimator against the
/// reference solver. A reference failure aborts the sweep naming the point.
pub fn error_map(estimator: Estimator, spec: &DomainSpec) -> Result<SweepResult, Error> {
    let conditions = materialize(spec)?;
    let points: Vec<(FlowConditions, f64)> = conditions
        .into_par_iter()
        .map(|fc| -> Result<(FlowConditions, f64), Error> {
            let lam_ref = solve_reference(fc)?.0;
            let lam_est = match estimator {
                Estimator::ApproxLevel(level) => approx_friction(fc, level)?.0,
                Estimator::TraditionalStart => {
                    let x0 = start_traditional(fc)?.0;
                    1.0 / (x0 * x0)
                }
                Estimator::ApproxSeededStart => {
                    let x0 = start_approx_seeded(fc).0;
                    1.0 / (x0 * x0)
                }
                Estimator::LambertForm => {
                    colebrook_via_lambert(fc, WMethod::Halley, DEFAULT_W_TOL)?.0
                }
            };
            Ok((fc, 100.0 * (lam_est - lam_ref).abs() / lam_ref))
        })
        .collect::<Result<_, _>>()?;
    reduce(points, MetricKind::RelativeErrorPct)
}

/// Arithmetic mean of converged iteration counts.
///
/// Errors when called on an error map or when no point converged.
pub fn mean_iterations(result: &SweepResult) -> Result<f64, Error> {
    if result.metric_kind != MetricKind::IterationCount {
        return Err(Error::WrongMetric);
    }
    mean_metric(result).ok_or(Error::EmptySweep)
}

/// Mean over converged points of either metric kind; None when empty.
fn mean_metric(result: &SweepResult) -> Option<f64> {
    let mut sum = 0.0;
    let mut n = 0usize;
    for &(_, m) in &result.points {
        if m.is_finite() {
            sum += m;
            n += 1;
        }
    }
    (n > 0).then(|| sum / n as f64)
}

/// Formats one CSV field: full-precision scientific notation (17
/// significant digits), `NaN` for sentinels.
fn csv_field(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the per-point table as CSV with header `re,rr,metric`.
pub fn write_csv<W: Write>(result: &SweepResult, out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["re", "rr", "metric"])?;
    for &(fc, m) in &result.points {
        w.write_record([csv_field(fc.re), csv_field(fc.rr), csv_field(m)])?;
    }
    w.flush()?;
    Ok(())
}

/// CSV convenience wrapper writing to a path.
pub fn write_csv_path(result: &SweepResult, path: &Path) -> Result<(), Error> {
    write_csv(result, std::fs::File::create(path)?)
}

/// The JSON summary of one sweep.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SweepSummary {
    /// Metric name (`iteration_count` or `relative_error_pct`).
    pub metric_kind: String,
    /// Total sampled points, converged or not.
    pub n_points: usize,
    /// Maximum metric over converged points.
    pub max_value: f64,
    /// Re of the maximizing point.
    pub argmax_re: f64,
    /// rr of the maximizing point.
    pub argmax_rr: f64,
    /// Mean metric over converged points.
    pub mean: f64,
    /// Number of non-converged points.
    pub n_nonconverged: usize,
}

/// Builds the summary record of a sweep.
pub fn summary(result: &SweepResult) -> SweepSummary {
    SweepSummary {
        metric_kind: result.metric_kind.name().to_string(),
        n_points: result.points.len(),
        max_value: result.max_value,
        argmax_re: result.argmax.re,
        argmax_rr: result.argmax.rr,
        mean: mean_metric(result).unwrap_or(f64::NAN),
        n_nonconverged: result.n_nonconverged,
    }
}

/// Writes the JSON summary (pretty-printed, trailing newline).
pub fn write_json<W: Write>(result: &SweepResult, mut out: W) -> Result<(), Error> {
    let s = serde_json::to_string_pretty(&summary(result)).expect("summary serializes");
    out.write_all(s.as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}

/// JSON convenience wrapper writing to a path.
pub fn write_json_path(result: &SweepResult, path: &Path) -> Result<(), Error> {
    write_json(result, std::fs::File::create(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid(nx: usize, ny: usize) -> DomainSpec {
        DomainSpec {
            sampler: Sampler::Grid { nx, ny },
            ..DomainSpec::default()
        }
    }

    #[test]
    fn grid_corners_are_exact_and_re_major() {
        let pts = materialize(&small_grid(2, 2)).unwrap();
        assert_eq!(
            pts,
            vec![
                FlowConditions::new(4000.0, 1e-7),
                FlowConditions::new(4000.0, 0.05),
                FlowConditions::new(1e8, 1e-7),
                FlowConditions::new(1e8, 0.05),
            ]
        );
    }

    #[test]
    fn sobol_midpoint_maps_to_log_center() {
        let spec = DomainSpec {
            sampler: Sampler::Sobol { n: 2 },
            ..DomainSpec::default()
        };
        let pts = materialize(&spec).unwrap();
        // First Sobol point is (0.5, 0.5).
        let re_mid = 10f64.powf((4000f64.log10() + 8.0) / 2.0);
        let rr_mid = 10f64.powf(((1e-7f64).log10() + 0.05f64.log10()) / 2.0);
        assert!(((pts[0].re - re_mid) / re_mid).abs() < 1e-12);
        assert!(((pts[0].rr - rr_mid) / rr_mid).abs() < 1e-12);
    }

    #[test]
    fn materialized_points_are_in_range_and_distinct() {
        let spec = DomainSpec {
            sampler: Sampler::Sobol { n: 4096 },
            ..DomainSpec::default()
        };
        let pts = materialize(&spec).unwrap();
        let mut seen = std::collections::HashSet::new();
        for fc in &pts {
            assert!(fc.re >= 4000.0 && fc.re <= 1e8);
            assert!(fc.rr >= 1e-7 && fc.rr <= 0.05);
            assert!(seen.insert((fc.re.to_bits(), fc.rr.to_bits())));
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let mut spec = DomainSpec::default();
        spec.rr_range = (0.0, 0.05);
        assert!(materialize(&spec).is_err());
        let mut spec = DomainSpec::default();
        spec.re_range = (1e8, 4000.0);
        assert!(materialize(&spec).is_err());
        let mut spec = DomainSpec::default();
        spec.sampler = Sampler::Grid { nx: 1, ny: 8 };
        assert!(materialize(&spec).is_err());
    }

    #[test]
    fn iteration_map_bounds_and_spot_values() {
        let r = iteration_map(
            Method::NewtonX,
            StartStrategy::Traditional,
            &small_grid(24, 24),
            1e-8,
        )
        .unwrap();
        assert_eq!(r.points.len(), 24 * 24);
        assert_eq!(r.n_nonconverged, 0);
        assert!(r.max_value >= 1.0 && r.max_value <= 100.0);
        // Spot-check one point against a direct solve.
        let (fc, metric) = r.points[100];
        let t = solve(fc, &SolverConfig::new(Method::NewtonX)).unwrap();
        assert_eq!(metric, t.iterations as f64);
        // The argmax point really attains the max.
        let found = r
            .points
            .iter()
            .find(|(fc, _)| *fc == r.argmax)
            .expect("argmax is a sampled point");
        assert_eq!(found.1, r.max_value);
    }

    #[test]
    fn traditional_error_map_corner_behavior() {
        // Rough-law corner: the traditional start is nearly exact.
        let r = error_map(Estimator::TraditionalStart, &small_grid(8, 8)).unwrap();
        let corner = r
            .points
            .iter()
            .find(|(fc, _)| fc.re == 1e8 && fc.rr == 0.05)
            .unwrap();
        assert!(corner.1 <= 0.1, "corner error {}", corner.1);
        assert!(r.max_value >= 0.0);

        // Smooth-flow slow area: the rough law misses badly somewhere.
        let slow = DomainSpec {
            re_range: (4000.0, 1e5),
            rr_range: (1e-7, 1e-5),
            scale: Scale::Log10,
            sampler: Sampler::Grid { nx: 12, ny: 12 },
        };
        let r = error_map(Estimator::TraditionalStart, &slow).unwrap();
        assert!(r.max_value >= 50.0, "slow-area max {}", r.max_value);
    }

    #[test]
    fn estimator_error_maps_are_sane() {
        let spec = small_grid(12, 12);
        let lvl1 = error_map(Estimator::ApproxLevel(1), &spec).unwrap();
        assert!(lvl1.max_value > 0.0 && lvl1.max_value <= 1.0);
        // The raw seed peaks at ~10.3% where the grid pins the smooth-pipe
        // edge (Re≈4e7, rr=1e-7) exactly.
        let seeded = error_map(Estimator::ApproxSeededStart, &spec).unwrap();
        assert!(seeded.max_value > 0.0 && seeded.max_value <= 12.0);
        let lambert = error_map(Estimator::LambertForm, &spec).unwrap();
        assert!(lambert.max_value > 0.0 && lambert.max_value <= 2.8);
    }

    #[test]
    fn mean_iterations_rules() {
        let single = SweepResult {
            points: vec![(FlowConditions::new(5e6, 2.5e-5), 4.0)],
            metric_kind: MetricKind::IterationCount,
            max_value: 4.0,
            argmax: FlowConditions::new(5e6, 2.5e-5),
            n_nonconverged: 0,
        };
        assert_eq!(mean_iterations(&single).unwrap(), 4.0);

        let constant = SweepResult {
            points: vec![
                (FlowConditions::new(5e6, 2.5e-5), 3.0),
                (FlowConditions::new(3e4, 9e-3), 3.0),
                (FlowConditions::new(1e6, 1e-4), 3.0),
            ],
            ..single.clone()
        };
        assert_eq!(mean_iterations(&constant).unwrap(), 3.0);

        let wrong = SweepResult {
            metric_kind: MetricKind::RelativeErrorPct,
            ..single.clone()
        };
        assert!(matches!(mean_iterations(&wrong), Err(Error::WrongMetric)));

        let empty = SweepResult {
            points: vec![(FlowConditions::new(5e6, 2.5e-5), f64::NAN)],
            n_nonconverged: 1,
            ..single
        };
        assert!(matches!(mean_iterations(&empty), Err(Error::EmptySweep)));
    }

    #[test]
    fn nan_sentinels_are_excluded_from_aggregates() {
        let pts = vec![
            (FlowConditions::new(5e6, 2.5e-5), 3.0),
            (FlowConditions::new(3e4, 9e-3), f64::NAN),
            (FlowConditions::new(1e6, 1e-4), 5.0),
        ];
        let r = reduce(pts, MetricKind::IterationCount).unwrap();
        assert_eq!(r.max_value, 5.0);
        assert_eq!(r.n_nonconverged, 1);
        assert_eq!(mean_iterations(&r).unwrap(), 4.0);

        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("re,rr,metric\n"));
        assert!(text.contains("NaN"));
    }

    #[test]
    fn ties_resolve_to_the_lowest_index() {
        let pts = vec![
            (FlowConditions::new(4000.0, 1e-7), 6.0),
            (FlowConditions::new(9000.0, 1e-6), 6.0),
        ];
        let r = reduce(pts, MetricKind::IterationCount).unwrap();
        assert_eq!(r.argmax, FlowConditions::new(4000.0, 1e-7));
    }

    #[test]
    fn results_are_identical_across_worker_counts() {
        let spec = small_grid(16, 16);
        let base = iteration_map(Method::NewtonX, StartStrategy::Traditional, &spec, 1e-8).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| {
                iteration_map(Method::NewtonX, StartStrategy::Traditional, &spec, 1e-8).unwrap()
            });
        assert_eq!(base, single);

        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&base, &mut a).unwrap();
        write_csv(&single, &mut b).unwrap();
        assert_eq!(a, b, "CSV bytes must be identical");
    }

    #[test]
    fn json_summary_shape() {
        let r = iteration_map(
            Method::NewtonX,
            StartStrategy::Traditional,
            &small_grid(4, 4),
            1e-8,
        )
        .unwrap();
        let mut buf = Vec::new();
        write_json(&r, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["metric_kind"], "iteration_count");
        assert_eq!(v["n_points"], 16);
        assert_eq!(v["n_nonconverged"], 0);
        assert!(v["max_value"].as_f64().unwrap() >= 1.0);
        assert!(v["mean"].as_f64().unwrap() >= 1.0);
        assert!(v["argmax_re"].as_f64().is_some());
        assert!(v["argmax_rr"].as_f64().is_some());
    }
}
