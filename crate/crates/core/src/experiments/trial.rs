//! Single trials: one random polynomial, its zeros, and every statistic.

use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use crate::error::Result;
use crate::polygen::{sample_interleaved, SeedPath};
use crate::realroots::{count_real_roots, ray_real_projection, RealPoly};
use crate::rootsolve::solve_roots;
use crate::zerostats::{
    arc_measure, box_count, ks_uniform_args, radial_count, sector_count, weyl_sum, AnnularBox, ZeroMeasure,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverDiagnostics {
    pub iterations: usize,
    pub max_residual: f64,
    pub converged: bool,
    pub extended: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealCountDiagnostics {
    /// The inclusion disks were inconclusive and the exact count was used.
    pub exact_fallback: bool,
    /// Floating-point Sturm count and its guarded re-evaluations.
    pub sturm_count: usize,
    pub sturm_escalations: usize,
}

/// Everything measured on one polynomial. Lists follow the order of the
/// corresponding configuration lists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: usize,
    pub trial: u64,
    /// `R_n(1 - delta, 1 + delta) / n` per delta.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annulus: Vec<f64>,
    /// `R_n(0, eps) / n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<f64>,
    /// `S_n(alpha, beta) / n` per sector.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sectors: Vec<f64>,
    /// `|S_n / n - (beta - alpha) / 2pi|` per sector.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sector_dev: Vec<f64>,
    /// `|weyl_sum(l)|` per order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weyl: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ks: Option<f64>,
    /// Max over the grid of `|N_n(box) / n - arc_measure(box)|`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_discrepancy: Option<f64>,
    /// `M_n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_roots: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverDiagnostics>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_count: Option<RealCountDiagnostics>,
}

impl TrialRecord {
    fn empty(n: usize, trial: u64) -> Self {
        TrialRecord {
            n,
            trial,
            annulus: vec![],
            inner: None,
            sectors: vec![],
            sector_dev: vec![],
            weyl: vec![],
            ks: None,
            grid_discrepancy: None,
            real_roots: None,
            solver: None,
            real_count: None,
        }
    }

    /// Numeric fields by name, in a fixed order, for summaries.
    pub fn fields(&self, cfg: &ExperimentConfig) -> Vec<(String, f64)> {
        let mut out = Vec::new();
        for (d, v) in cfg.deltas.iter().zip(&self.annulus) {
            out.push((format!("annulus_{d}"), *v));
        }
        if let Some(v) = self.inner {
            out.push((format!("inner_{}", cfg.inner_radius), v));
        }
        for (i, v) in self.sectors.iter().enumerate() {
            out.push((format!("sector_{i}"), *v));
        }
        for (i, v) in self.sector_dev.iter().enumerate() {
            out.push((format!("sector_dev_{i}"), *v));
        }
        for (l, v) in cfg.weyl_ls.iter().zip(&self.weyl) {
            out.push((format!("weyl_{l}"), *v));
        }
        if let Some(v) = self.ks {
            out.push(("ks".into(), v));
        }
        if let Some(v) = self.grid_discrepancy {
            out.push(("grid_discrepancy".into(), v));
        }
        if let Some(m) = self.real_roots {
            out.push(("real_roots".into(), m as f64));
            out.push(("real_roots_over_n".into(), m as f64 / self.n as f64));
        }
        if let Some(s) = &self.solver {
            out.push(("iterations".into(), s.iterations as f64));
            out.push(("max_residual".into(), s.max_residual));
        }
        out
    }
}

fn seed(cfg: &ExperimentConfig, trial: u64) -> SeedPath {
    SeedPath::new(cfg.master_seed, trial)
}

/// Radial, angular, Weyl, KS and grid statistics of a zero set, with the
/// lists taken from `cfg`.
pub fn measure_zeros(cfg: &ExperimentConfig, m: &ZeroMeasure, n: usize, trial: u64) -> Result<TrialRecord> {
    let nz = m.n() as f64;
    let mut rec = TrialRecord::empty(n, trial);
    for &d in &cfg.deltas {
        rec.annulus.push(radial_count(m, 1.0 - d, 1.0 + d)? as f64 / nz);
    }
    rec.inner = Some(radial_count(m, 0.0, cfg.inner_radius)? as f64 / nz);
    for &(a, b) in &cfg.sectors {
        let p = sector_count(m, a, b)? as f64 / nz;
        rec.sectors.push(p);
        rec.sector_dev.push((p - (b - a) / std::f64::consts::TAU).abs());
    }
    for &l in &cfg.weyl_ls {
        rec.weyl.push(weyl_sum(m, l)?.norm());
    }
    rec.ks = Some(ks_uniform_args(m)?);
    let grid = AnnularBox::grid(&cfg.ring_edges, cfg.grid_sectors)?;
    rec.grid_discrepancy = Some(
        grid.iter()
            .map(|bx| (box_count(m, bx) as f64 / nz - arc_measure(bx)).abs())
            .fold(0.0, f64::max),
    );
    Ok(rec)
}

/// Solve one polynomial and measure its zeros.
pub fn complex_trial(cfg: &ExperimentConfig, n: usize, trial: u64) -> Result<TrialRecord> {
    let coeffs = sample_interleaved(&cfg.laws(), n, seed(cfg, trial))?;
    let rs = solve_roots(&coeffs.to_polynomial()?, cfg.tol, cfg.max_iter)?;
    let mut rec = measure_zeros(cfg, &ZeroMeasure::from_roots(&rs), n, trial)?;
    rec.solver = Some(SolverDiagnostics {
        iterations: rs.iterations,
        max_residual: rs.max_residual(),
        converged: rs.converged,
        extended: rs.extended,
    });
    Ok(rec)
}

/// Count the real zeros of one polynomial (or of its ray projection).
pub fn real_trial(cfg: &ExperimentConfig, n: usize, trial: u64) -> Result<TrialRecord> {
    let coeffs = sample_interleaved(&cfg.laws(), n, seed(cfg, trial))?;
    let p = match cfg.ray {
        Some((q, den)) => ray_real_projection(&coeffs.to_polynomial()?, q, den)?,
        None => RealPoly::from_f64(&coeffs.real_parts())?,
    };
    let c = count_real_roots(&p)?;
    let mut rec = TrialRecord::empty(n, trial);
    rec.real_roots = Some(c.count);
    rec.real_count = Some(RealCountDiagnostics {
        exact_fallback: c.escalated(),
        sturm_count: c.sturm,
        sturm_escalations: c.sturm_escalations,
    });
    Ok(rec)
}
