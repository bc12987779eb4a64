//! Experiment configuration and its `key = value` file format.
//!
//! ```text
//! dist = "gaussian"
//! params = [0.0, 1.0]
//! interleave = "rademacher"        # optional second law, odd indices
//! interleave_params = []
//! degrees = [125, 250, 500, 1000]
//! trials = 100
//! deltas = [0.05, 0.1]
//! sectors = [[0.0, 3.141592653589793]]
//! weyl_ls = [1, 2, 3, 4]
//! master_seed = 1234
//! ring_edges = [0.0, 0.9, 1.1, inf]
//! grid_sectors = 8
//! inner_radius = 0.5
//! ray = [1, 8]                     # optional: real part along angle 2 pi 1/8
//! tol = 1e-12
//! max_iter = 500
//! ```
//!
//! Every key except `dist` is optional and falls back to the defaults of
//! [`ExperimentConfig::new`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygen::CoeffDistribution;
use crate::rootsolve::{DEFAULT_MAX_ITER, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub dist: CoeffDistribution,
    /// Second law for odd-indexed coefficients (`dist` keeps the even ones).
    pub interleave: Option<CoeffDistribution>,
    pub degrees: Vec<usize>,
    pub trials: usize,
    pub deltas: Vec<f64>,
    pub sectors: Vec<(f64, f64)>,
    pub weyl_ls: Vec<u32>,
    pub master_seed: u64,
    /// Ring boundaries of the annular-sector grid.
    pub ring_edges: Vec<f64>,
    pub grid_sectors: usize,
    /// `eps` of the inner-disk count `R(0, eps) / n`.
    pub inner_radius: f64,
    /// Ray `2 pi q / den` for the real projection of a complex law.
    pub ray: Option<(u64, u64)>,
    pub tol: f64,
    pub max_iter: usize,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    dist: String,
    #[serde(default)]
    params: Option<Vec<f64>>,
    interleave: Option<String>,
    #[serde(default)]
    interleave_params: Option<Vec<f64>>,
    degrees: Option<Vec<usize>>,
    trials: Option<usize>,
    deltas: Option<Vec<f64>>,
    sectors: Option<Vec<[f64; 2]>>,
    weyl_ls: Option<Vec<u32>>,
    master_seed: Option<u64>,
    ring_edges: Option<Vec<f64>>,
    grid_sectors: Option<usize>,
    inner_radius: Option<f64>,
    ray: Option<[u64; 2]>,
    tol: Option<f64>,
    max_iter: Option<usize>,
}

/// Default parameters of each registered law.
fn law(name: &str, params: Option<Vec<f64>>) -> Result<CoeffDistribution> {
    let params = match params {
        Some(p) => p,
        None => crate::polygen::registry()
            .into_iter()
            .find(|d| d.name() == name)
            .map(|d| d.params().to_vec())
            .unwrap_or_default(),
    };
    CoeffDistribution::new(name, &params)
}

impl ExperimentConfig {
    /// Defaults: degrees {125, 250, 500, 1000}, 100 trials, deltas {0.05, 0.1},
    /// sectors [0, pi) and [0, pi/2), Weyl orders 1..4, master seed 1234,
    /// rings {0, 0.9, 1.1, inf} by 8 sectors, inner radius 0.5.
    pub fn new(dist: CoeffDistribution) -> Self {
        ExperimentConfig {
            dist,
            interleave: None,
            degrees: vec![125, 250, 500, 1000],
            trials: 100,
            deltas: vec![0.05, 0.1],
            sectors: vec![(0.0, PI), (0.0, PI / 2.0)],
            weyl_ls: vec![1, 2, 3, 4],
            master_seed: 1234,
            ring_edges: vec![0.0, 0.9, 1.1, f64::INFINITY],
            grid_sectors: 8,
            inner_radius: 0.5,
            ray: None,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
        let mut cfg = ExperimentConfig::new(law(&raw.dist, raw.params)?);
        if let Some(name) = raw.interleave {
            cfg.interleave = Some(law(&name, raw.interleave_params)?);
        } else if raw.interleave_params.is_some() {
            return Err(Error::Config("interleave_params given without interleave".into()));
        }
        macro_rules! take {
            ($($f:ident),*) => { $(if let Some(v) = raw.$f { cfg.$f = v; })* };
        }
        take!(degrees, trials, deltas, weyl_ls, master_seed, ring_edges, grid_sectors, inner_radius, tol, max_iter);
        if let Some(s) = raw.sectors {
            cfg.sectors = s.into_iter().map(|[a, b]| (a, b)).collect();
        }
        cfg.ray = raw.ray.map(|[q, den]| (q, den));
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::Config(reason));
        if self.degrees.is_empty() {
            return bad("degrees must not be empty".into());
        }
        if self.degrees[0] == 0 || self.degrees.windows(2).any(|w| w[0] >= w[1]) {
            return bad("degrees must be positive and strictly increasing".into());
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if let Some(d) = self.deltas.iter().find(|d| !(**d > 0.0 && **d < 1.0)) {
            return bad(format!("delta {d} outside (0, 1)"));
        }
        for &(a, b) in &self.sectors {
            if !(0.0 <= a && a < b && b <= std::f64::consts::TAU) {
                return bad(format!("sector [{a}, {b}) not inside [0, 2pi)"));
            }
        }
        if self.weyl_ls.contains(&0) {
            return bad("Weyl orders must be at least 1".into());
        }
        if self.ring_edges.len() < 2
            || self.ring_edges[0] < 0.0
            || self.ring_edges.windows(2).any(|w| !(w[0] < w[1]))
        {
            return bad("ring_edges must be nonnegative and strictly increasing".into());
        }
        if self.grid_sectors == 0 {
            return bad("grid_sectors must be at least 1".into());
        }
        if !(self.inner_radius > 0.0) {
            return bad("inner_radius must be positive".into());
        }
        if let Some((q, den)) = self.ray {
            if den == 0 || q >= den {
                return bad(format!("ray needs 0 <= q < den, got {q}/{den}"));
            }
        }
        if !(self.tol > 0.0) || self.max_iter == 0 {
            return bad("tol and max_iter must be positive".into());
        }
        Ok(())
    }

    /// The coefficient laws, in interleave order.
    pub fn laws(&self) -> Vec<CoeffDistribution> {
        let mut v = vec![self.dist.clone()];
        v.extend(self.interleave.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_file() {
        let cfg = ExperimentConfig::parse(
            r#"
            dist = "gaussian"
            params = [0.0, 2.0]
            interleave = "rademacher"
            degrees = [10, 20]
            trials = 7
            deltas = [0.2]
            sectors = [[0.0, 1.0], [1.0, 2.0]]
            weyl_ls = [1, 3]
            master_seed = 99
            ring_edges = [0.0, 1.0, inf]
            grid_sectors = 4
            ray = [1, 8]
            "#,
        )
        .unwrap();
        assert_eq!(cfg.dist.params(), &[0.0, 2.0]);
        assert_eq!(cfg.interleave.as_ref().unwrap().name(), "rademacher");
        assert_eq!(cfg.degrees, vec![10, 20]);
        assert_eq!(cfg.trials, 7);
        assert_eq!(cfg.sectors, vec![(0.0, 1.0), (1.0, 2.0)]);
        assert_eq!(cfg.ring_edges[2], f64::INFINITY);
        assert_eq!(cfg.ray, Some((1, 8)));
        assert_eq!(cfg.master_seed, 99);
    }

    #[test]
    fn defaults_fill_missing_keys() {
        let cfg = ExperimentConfig::parse("dist = \"gaussian\"").unwrap();
        assert_eq!(cfg.dist.params(), &[0.0, 1.0]);
        assert_eq!(cfg.degrees, vec![125, 250, 500, 1000]);
        assert_eq!(cfg.trials, 100);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            "dist = \"nope\"",
            "dist = \"gaussian\"\ndegrees = []",
            "dist = \"gaussian\"\ndegrees = [20, 10]",
            "dist = \"gaussian\"\ntrials = 0",
            "dist = \"gaussian\"\ndeltas = [1.5]",
            "dist = \"gaussian\"\nunknown_key = 3",
            "dist = \"gaussian\"\nray = [8, 8]",
            "degrees = [10]",
        ] {
            assert!(ExperimentConfig::parse(text).is_err(), "{text}");
        }
    }
}
