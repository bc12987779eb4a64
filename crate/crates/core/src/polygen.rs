//! Coefficient laws and deterministic sampling of coefficient vectors.
//!
//! Every draw for trial `t` under master seed `s` comes from ChaCha8 keyed by
//! `s` on stream `t`, so a trial's coefficients depend only on `(s, t)` and
//! never on scheduling. Draws are sequential within a stream, which makes the
//! vector for degree `n` a prefix of the vector for any larger degree.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Cauchy, Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsolve::{ExtComplex, Polynomial};

/// Provenance of a random stream: master seed plus trial index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedPath {
    pub master: u64,
    pub trial: u64,
}

impl SeedPath {
    pub fn new(master: u64, trial: u64) -> Self {
        SeedPath { master, trial }
    }

    /// Independent generator for this path.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.trial);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Law {
    /// Real and imaginary parts i.i.d. N(0, sigma^2 / 2), so E|xi|^2 = sigma^2.
    ComplexGaussian { sigma: f64 },
    /// Real N(mean, sd^2).
    Gaussian { mean: f64, sd: f64 },
    /// +1 or -1 with probability 1/2.
    Rademacher,
    /// Real uniform on [lo, hi].
    Uniform { lo: f64, hi: f64 },
    /// e^{i theta}, theta uniform on [0, 2pi).
    UnitCircle,
    /// exp(scale |C|) e^{i theta}, C standard Cauchy, theta uniform on [0, 2pi).
    /// E log(1 + |xi|) is infinite.
    ExpHalfCauchy { scale: f64 },
    /// Degenerate law at a nonzero point.
    PointMass(Complex64),
}

/// A named coefficient law.
///
/// | name               | params         | law                                             |
/// |--------------------|----------------|-------------------------------------------------|
/// | `complex_gaussian` | `[sigma]`      | re, im i.i.d. N(0, sigma^2/2); default sigma=1  |
/// | `gaussian`         | `[mean, sd]`   | real N(mean, sd^2); default `[0, 1]`            |
/// | `rademacher`       | none           | real, +1 or -1                                  |
/// | `uniform`          | `[lo, hi]`     | real uniform on [lo, hi]; default `[-1, 1]`     |
/// | `unit_circle`      | none           | e^{i theta}, theta uniform                      |
/// | `exp_half_cauchy`  | `[scale]`      | exp(scale \|C\|) e^{i theta}; default scale=1   |
/// | `point_mass`       | `[re]`, `[re, im]` | constant, must be nonzero                   |
///
/// No registered law has an atom at zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffDistribution {
    name: String,
    params: Vec<f64>,
    law: Law,
}

pub const DISTRIBUTION_NAMES: &[&str] = &[
    "complex_gaussian",
    "gaussian",
    "rademacher",
    "uniform",
    "unit_circle",
    "exp_half_cauchy",
    "point_mass",
];

impl CoeffDistribution {
    pub fn new(name: &str, params: &[f64]) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidParams {
            name: name.to_string(),
            reason: reason.to_string(),
        };
        if params.iter().any(|p| !p.is_finite()) {
            return Err(bad("parameters must be finite"));
        }
        let arity = |allowed: &[usize]| {
            if allowed.contains(&params.len()) {
                Ok(())
            } else {
                Err(bad(&format!("expected {allowed:?} parameters, got {}", params.len())))
            }
        };
        let law = match name {
            "complex_gaussian" => {
                arity(&[0, 1])?;
                let sigma = params.first().copied().unwrap_or(1.0);
                if sigma <= 0.0 {
                    return Err(bad("sigma must be positive"));
                }
                Law::ComplexGaussian { sigma }
            }
            "gaussian" => {
                arity(&[0, 2])?;
                let (mean, sd) = if params.is_empty() { (0.0, 1.0) } else { (params[0], params[1]) };
                if sd < 0.0 {
                    return Err(bad("sd must be nonnegative"));
                }
                if sd == 0.0 && mean == 0.0 {
                    return Err(bad("point mass at zero"));
                }
                Law::Gaussian { mean, sd }
            }
            "rademacher" => {
                arity(&[0])?;
                Law::Rademacher
            }
            "uniform" => {
                arity(&[0, 2])?;
                let (lo, hi) = if params.is_empty() { (-1.0, 1.0) } else { (params[0], params[1]) };
                if lo >= hi {
                    return Err(bad("need lo < hi"));
                }
                Law::Uniform { lo, hi }
            }
            "unit_circle" => {
                arity(&[0])?;
                Law::UnitCircle
            }
            "exp_half_cauchy" => {
                arity(&[0, 1])?;
                let scale = params.first().copied().unwrap_or(1.0);
                if scale <= 0.0 {
                    return Err(bad("scale must be positive"));
                }
                Law::ExpHalfCauchy { scale }
            }
            "point_mass" => {
                arity(&[1, 2])?;
                let z = Complex64::new(params[0], params.get(1).copied().unwrap_or(0.0));
                if z.norm() == 0.0 {
                    return Err(bad("point mass at zero"));
                }
                Law::PointMass(z)
            }
            other => return Err(Error::UnknownDistribution(other.to_string())),
        };
        Ok(CoeffDistribution {
            name: name.to_string(),
            params: params.to_vec(),
            law,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    /// Whether draws are real-valued.
    pub fn is_real(&self) -> bool {
        match self.law {
            Law::Gaussian { .. } | Law::Rademacher | Law::Uniform { .. } => true,
            Law::PointMass(z) => z.im == 0.0,
            Law::ComplexGaussian { .. } | Law::UnitCircle | Law::ExpHalfCauchy { .. } => false,
        }
    }

    /// Whether `E log(1 + |xi|)` is finite.
    pub fn log_moment_finite(&self) -> bool {
        !matches!(self.law, Law::ExpHalfCauchy { .. })
    }

    /// One draw.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtComplex {
        match self.law {
            Law::ComplexGaussian { sigma } => {
                let s = sigma * FRAC_1_SQRT_2;
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                ExtComplex::new(s * re, s * im)
            }
            Law::Gaussian { mean, sd } => {
                let x: f64 = rng.sample(StandardNormal);
                ExtComplex::from_real(mean + sd * x)
            }
            Law::Rademacher => ExtComplex::from_real(if rng.random::<bool>() { 1.0 } else { -1.0 }),
            Law::Uniform { lo, hi } => ExtComplex::from_real(lo + (hi - lo) * rng.random::<f64>()),
            Law::UnitCircle => {
                let theta = TAU * rng.random::<f64>();
                ExtComplex::from(Complex64::from_polar(1.0, theta))
            }
            Law::ExpHalfCauchy { scale } => {
                let theta = TAU * rng.random::<f64>();
                let c: f64 = Cauchy::new(0.0, 1.0).expect("valid Cauchy").sample(rng);
                ExtComplex::from_polar_ln(scale * c.abs(), theta)
            }
            Law::PointMass(z) => ExtComplex::from(z),
        }
    }
}

impl fmt::Display for CoeffDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", p.join(","))?;
        }
        Ok(())
    }
}

/// The default instance of every registered law.
pub fn registry() -> Vec<CoeffDistribution> {
    [
        ("complex_gaussian", &[][..]),
        ("gaussian", &[0.0, 1.0][..]),
        ("rademacher", &[][..]),
        ("uniform", &[-1.0, 1.0][..]),
        ("unit_circle", &[][..]),
        ("exp_half_cauchy", &[1.0][..]),
    ]
    .iter()
    .map(|(n, p)| CoeffDistribution::new(n, p).expect("registry entries are valid"))
    .collect()
}

/// `n + 1` coefficients of a random polynomial plus their seed provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    pub values: Vec<ExtComplex>,
    pub seed: SeedPath,
}

impl CoefficientVector {
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn to_polynomial(&self) -> Result<Polynomial> {
        Polynomial::from_ext(self.values.clone())
    }

    /// Real parts, for laws flagged `is_real`.
    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_complex64().re).collect()
    }
}

/// Draw `xi_0, ..., xi_n` i.i.d. from `dist`.
pub fn sample_coefficients(dist: &CoeffDistribution, n: usize, seed: SeedPath) -> Result<CoefficientVector> {
    sample_interleaved(std::slice::from_ref(dist), n, seed)
}

/// Draw `xi_k` from `dists[k % dists.len()]`: independent, not identically
/// distributed coefficients drawn from a finite family of laws.
pub fn sample_interleaved(dists: &[CoeffDistribution], n: usize, seed: SeedPath) -> Result<CoefficientVector> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if dists.is_empty() {
        return Err(Error::InvalidArgument("no distribution given".into()));
    }
    let mut rng = seed.rng();
    let values = (0..=n).map(|k| dists[k % dists.len()].draw(&mut rng)).collect();
    Ok(CoefficientVector { values, seed })
}

/// Sample mean of `log(1 + |xi|)` over `count` fresh draws.
pub fn estimate_log_moment(dist: &CoeffDistribution, count: usize, seed: SeedPath) -> Result<f64> {
    if count == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let mut rng = seed.rng();
    let total: f64 = (0..count).map(|_| dist.draw(&mut rng).ln_1p_abs()).sum();
    Ok(total / count as f64)
}
