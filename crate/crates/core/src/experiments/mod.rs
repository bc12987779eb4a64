//! Monte Carlo harness: each experiment samples `trials` polynomials per
//! degree, measures them, summarizes per degree and evaluates its trend
//! checks.
//!
//! Trial `t` at every degree uses the seed path `(master_seed, t)`, so a
//! record depends only on the configuration and its own index. Trials run on
//! a worker pool and are collected in index order before any reduction, so
//! results are bit-identical for every worker count.

pub mod acceptance;
mod concentration;
mod config;
mod summary;
mod trial;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use concentration::estimate_concentration;
pub use config::ExperimentConfig;
pub use summary::{DegreeSummary, FieldStats, SummaryStats};
pub use trial::{complex_trial, measure_zeros, real_trial, RealCountDiagnostics, SolverDiagnostics, TrialRecord};

/// Failure rate (non-convergence or exact fallback) that aborts a run.
pub const MAX_FAILURE_RATE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Radial,
    Divergence,
    Angular,
    RealRoot,
    ArcMeasure,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 5] = [
        ExperimentKind::Radial,
        ExperimentKind::Divergence,
        ExperimentKind::Angular,
        ExperimentKind::RealRoot,
        ExperimentKind::ArcMeasure,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Radial => "radial",
            ExperimentKind::Divergence => "divergence",
            ExperimentKind::Angular => "angular",
            ExperimentKind::RealRoot => "realroot",
            ExperimentKind::ArcMeasure => "arc_measure",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExperimentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown experiment {s:?}")))
    }
}

/// A named pass/fail assertion with a human-readable detail.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub kind: ExperimentKind,
    pub records: Vec<TrialRecord>,
    pub summary: SummaryStats,
    pub checks: Vec<Check>,
    /// Least-squares slope of mean `M_n` against `ln n` (real-root runs).
    pub slope: Option<f64>,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One JSON object per trial.
    pub fn records_jsonl(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&serde_json::to_string(r).expect("records serialize"));
            s.push('\n');
        }
        s
    }
}

/// Run `f` on every `(degree, trial)` pair with `workers` threads
/// (`0`: one per logical core). Output is in degree-then-trial order.
pub fn run_trials<F>(cfg: &ExperimentConfig, workers: usize, f: F) -> Result<Vec<TrialRecord>>
where
    F: Fn(&ExperimentConfig, usize, u64) -> Result<TrialRecord> + Sync,
{
    cfg.validate()?;
    let jobs: Vec<(usize, u64)> = cfg
        .degrees
        .iter()
        .flat_map(|&n| (0..cfg.trials as u64).map(move |t| (n, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    pool.install(|| jobs.par_iter().map(|&(n, t)| f(cfg, n, t)).collect())
}

pub fn summarize(cfg: &ExperimentConfig, records: &[TrialRecord]) -> SummaryStats {
    let degrees = cfg
        .degrees
        .iter()
        .map(|&n| {
            let rows: Vec<Vec<(String, f64)>> = records
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.fields(cfg))
                .collect();
            let names: Vec<String> = rows.first().map(|r| r.iter().map(|(k, _)| k.clone()).collect()).unwrap_or_default();
            let fields = names
                .iter()
                .enumerate()
                .filter_map(|(i, name)| {
                    let vals: Vec<f64> = rows.iter().map(|r| r[i].1).collect();
                    FieldStats::from_values(&vals).map(|s| (name.clone(), s))
                })
                .collect();
            DegreeSummary {
                n,
                trials: rows.len(),
                fields,
            }
        })
        .collect();
    SummaryStats { degrees }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Trend {
    Increasing,
    Decreasing,
}

/// Consecutive means move in direction `dir`. With `slack_se > 0` a step the
/// wrong way is tolerated up to that many standard errors of the
/// difference; with `slack_se == 0` the change must be strict.
fn trend_check(summary: &SummaryStats, field: &str, dir: Trend, slack_se: f64) -> Check {
    let series = summary.series(field);
    let mut passed = !series.is_empty();
    let mut parts = Vec::new();
    for (n, s) in &series {
        parts.push(format!("n={n}: {:.6}", s.mean));
    }
    for w in series.windows(2) {
        let (a, b) = (w[0].1, w[1].1);
        let se = (a.std_error().powi(2) + b.std_error().powi(2)).sqrt();
        let ok = match (dir, slack_se > 0.0) {
            (Trend::Increasing, true) => b.mean >= a.mean - slack_se * se,
            (Trend::Decreasing, true) => b.mean <= a.mean + slack_se * se,
            (Trend::Increasing, false) => b.mean > a.mean,
            (Trend::Decreasing, false) => b.mean < a.mean,
        };
        passed &= ok;
    }
    let how = match (dir, slack_se > 0.0) {
        (Trend::Increasing, true) => format!("non-decreasing within {slack_se} SE"),
        (Trend::Decreasing, true) => format!("non-increasing within {slack_se} SE"),
        (Trend::Increasing, false) => "strictly increasing".to_string(),
        (Trend::Decreasing, false) => "strictly decreasing".to_string(),
    };
    Check {
        name: format!("{field} {how}"),
        passed,
        detail: parts.join(", "),
    }
}

fn abort_on_nonconvergence(records: &[TrialRecord]) -> Result<()> {
    let bad: Vec<&TrialRecord> = records
        .iter()
        .filter(|r| r.solver.as_ref().is_some_and(|s| !s.converged))
        .collect();
    if bad.len() as f64 > MAX_FAILURE_RATE * records.len() as f64 {
        let first = bad[0];
        return Err(Error::Aborted(format!(
            "solver failed to converge on {} of {} trials (first: n={}, trial={}, max residual {:e})",
            bad.len(),
            records.len(),
            first.n,
            first.trial,
            first.solver.as_ref().map_or(f64::NAN, |s| s.max_residual)
        )));
    }
    Ok(())
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Config(what.into()))
    }
}

fn report(kind: ExperimentKind, cfg: &ExperimentConfig, records: Vec<TrialRecord>) -> ExperimentReport {
    let summary = summarize(cfg, &records);
    ExperimentReport {
        kind,
        records,
        summary,
        checks: vec![],
        slope: None,
    }
}

/// Zeros concentrate near the unit circle: the annulus fraction for each
/// delta must not decrease with `n` beyond 2 standard errors.
pub fn run_radial_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    require(
        cfg.laws().iter().all(|d| d.log_moment_finite()),
        "radial experiment needs a law with finite logarithmic moment",
    )?;
    let records = run_trials(cfg, workers, complex_trial)?;
    abort_on_nonconvergence(&records)?;
    let mut rep = report(ExperimentKind::Radial, cfg, records);
    for d in &cfg.deltas {
        let c = trend_check(&rep.summary, &format!("annulus_{d}"), Trend::Increasing, 2.0);
        rep.checks.push(c);
    }
    Ok(rep)
}

/// Without the logarithmic moment the zeros do not concentrate: the
/// smallest delta = 0.5 annulus fraction over the trials is at most 0.5.
pub fn run_divergence_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    require(
        cfg.laws().iter().any(|d| !d.log_moment_finite()),
        "divergence experiment needs a law with infinite logarithmic moment",
    )?;
    let mut cfg = cfg.clone();
    if !cfg.deltas.contains(&0.5) {
        cfg.deltas.push(0.5);
    }
    let k = cfg.deltas.iter().position(|&d| d == 0.5).expect("just ensured");
    let records = run_trials(&cfg, workers, complex_trial)?;
    abort_on_nonconvergence(&records)?;
    let mut rep = report(ExperimentKind::Divergence, &cfg, records);
    for &n in &cfg.degrees {
        let rows: Vec<&TrialRecord> = rep.records.iter().filter(|r| r.n == n).collect();
        let min = rows.iter().map(|r| r.annulus[k]).fold(f64::INFINITY, f64::min);
        let all_inside = rows.iter().filter(|r| r.inner == Some(1.0)).count() as f64 / rows.len() as f64;
        rep.checks.push(Check {
            name: format!("n={n}: min annulus_0.5 <= 0.5"),
            passed: min <= 0.5,
            detail: format!(
                "min {min:.6}; trials with every zero in |z| <= {}: {all_inside:.6}",
                cfg.inner_radius
            ),
        });
    }
    Ok(rep)
}

/// Arguments equidistribute whatever the law: mean KS distance strictly
/// decreases with `n`.
pub fn run_angular_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    let records = run_trials(cfg, workers, complex_trial)?;
    abort_on_nonconvergence(&records)?;
    let mut rep = report(ExperimentKind::Angular, cfg, records);
    let c = trend_check(&rep.summary, "ks", Trend::Decreasing, 0.0);
    rep.checks.push(c);
    Ok(rep)
}

/// Least-squares slope of `y` against `x`.
fn slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

/// Real zeros are sparse: `M_n / n` decreases with `n`. Reports the slope of
/// mean `M_n` against `ln n`.
pub fn run_realroot_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    require(
        cfg.ray.is_some() || cfg.laws().iter().all(|d| d.is_real()),
        "real-root experiment needs a real law or a ray projection",
    )?;
    let records = run_trials(cfg, workers, real_trial)?;
    let fallbacks = records
        .iter()
        .filter(|r| r.real_count.as_ref().is_some_and(|c| c.exact_fallback))
        .count();
    if fallbacks as f64 > MAX_FAILURE_RATE * records.len() as f64 {
        return Err(Error::Aborted(format!(
            "real-root count needed the exact fallback on {fallbacks} of {} trials",
            records.len()
        )));
    }
    let mut rep = report(ExperimentKind::RealRoot, cfg, records);
    let pts: Vec<(f64, f64)> = rep
        .summary
        .series("real_roots")
        .iter()
        .map(|(n, s)| ((*n as f64).ln(), s.mean))
        .collect();
    rep.slope = slope(&pts);
    let c = trend_check(&rep.summary, "real_roots_over_n", Trend::Decreasing, 0.0);
    rep.checks.push(c);
    Ok(rep)
}

/// The empirical measure approaches the uniform law on the circle on every
/// box of the grid: the max discrepancy does not grow beyond 2 standard
/// errors.
pub fn run_arc_measure_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    require(
        cfg.laws().iter().all(|d| d.log_moment_finite()),
        "arc-measure experiment needs a law with finite logarithmic moment",
    )?;
    let records = run_trials(cfg, workers, complex_trial)?;
    abort_on_nonconvergence(&records)?;
    let mut rep = report(ExperimentKind::ArcMeasure, cfg, records);
    let c = trend_check(&rep.summary, "grid_discrepancy", Trend::Decreasing, 2.0);
    rep.checks.push(c);
    Ok(rep)
}

pub fn run_experiment(kind: ExperimentKind, cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    match kind {
        ExperimentKind::Radial => run_radial_experiment(cfg, workers),
        ExperimentKind::Divergence => run_divergence_experiment(cfg, workers),
        ExperimentKind::Angular => run_angular_experiment(cfg, workers),
        ExperimentKind::RealRoot => run_realroot_experiment(cfg, workers),
        ExperimentKind::ArcMeasure => run_arc_measure_experiment(cfg, workers),
    }
}
