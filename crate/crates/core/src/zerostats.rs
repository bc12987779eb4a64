//! Empirical zero measures and argument-uniformity diagnostics.
//!
//! Radial intervals are closed at both ends. Sectors are half-open
//! `[alpha, beta)` so that a partition of `[0, 2pi)` counts every zero once.
//! For continuous coefficient laws zeros land on a boundary with probability
//! zero, so neither convention changes the statistics.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rootsolve::RootSet;

/// Moduli and arguments of a set of zeros, sorted by modulus.
///
/// `moduli[j]` and `args[j]` describe the same zero. Moduli may be `0` or
/// `inf` when a zero lies outside the range of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroMeasure {
    moduli: Vec<f64>,
    args: Vec<f64>,
}

impl ZeroMeasure {
    pub fn from_roots(rs: &RootSet) -> Self {
        Self::from_polar(rs.roots.iter().map(|z| (z.abs_f64(), z.arg_2pi())).collect())
    }

    pub fn from_complex(roots: &[Complex64]) -> Self {
        Self::from_polar(
            roots
                .iter()
                .map(|z| (z.norm(), crate::rootsolve::ext::wrap_angle(z.arg())))
                .collect(),
        )
    }

    /// From `(modulus, argument)` pairs; arguments are reduced into `[0, 2pi)`.
    pub fn from_polar(mut pairs: Vec<(f64, f64)>) -> Self {
        for p in &mut pairs {
            p.1 = p.1.rem_euclid(TAU);
            if p.1 >= TAU {
                p.1 = 0.0;
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let (moduli, args) = pairs.into_iter().unzip();
        ZeroMeasure { moduli, args }
    }

    pub fn n(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[f64] {
        &self.moduli
    }

    pub fn args(&self) -> &[f64] {
        &self.args
    }
}

/// `R(a, b)`: number of zeros with `a <= |z| <= b`.
pub fn radial_count(m: &ZeroMeasure, a: f64, b: f64) -> Result<usize> {
    if a.is_nan() || b.is_nan() || a < 0.0 || a >= b {
        return Err(Error::InvalidInterval { lo: a, hi: b });
    }
    let lo = m.moduli.partition_point(|&r| r < a);
    let hi = m.moduli.partition_point(|&r| r <= b);
    Ok(hi - lo)
}

fn check_sector(alpha: f64, beta: f64) -> Result<()> {
    if alpha.is_nan() || beta.is_nan() || alpha < 0.0 || beta > TAU || alpha >= beta {
        return Err(Error::InvalidInterval { lo: alpha, hi: beta });
    }
    Ok(())
}

/// `S(alpha, beta)`: number of zeros with argument in `[alpha, beta)`.
pub fn sector_count(m: &ZeroMeasure, alpha: f64, beta: f64) -> Result<usize> {
    check_sector(alpha, beta)?;
    Ok(m.args.iter().filter(|&&t| alpha <= t && t < beta).count())
}

/// An annular sector `r_lo <= |z| <= r_hi`, `alpha <= arg z < beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnularBox {
    pub r_lo: f64,
    pub r_hi: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl AnnularBox {
    pub fn new(r_lo: f64, r_hi: f64, alpha: f64, beta: f64) -> Result<Self> {
        if r_lo.is_nan() || r_hi.is_nan() || r_lo < 0.0 || r_lo >= r_hi {
            return Err(Error::InvalidInterval { lo: r_lo, hi: r_hi });
        }
        check_sector(alpha, beta)?;
        Ok(AnnularBox {
            r_lo,
            r_hi,
            alpha,
            beta,
        })
    }

    /// `ring_edges.len() - 1` rings times `sectors` equal sectors.
    pub fn grid(ring_edges: &[f64], sectors: usize) -> Result<Vec<AnnularBox>> {
        if sectors == 0 || ring_edges.len() < 2 {
            return Err(Error::InvalidArgument("grid needs at least one ring and one sector".into()));
        }
        let mut boxes = Vec::with_capacity((ring_edges.len() - 1) * sectors);
        for w in ring_edges.windows(2) {
            for s in 0..sectors {
                let alpha = TAU * s as f64 / sectors as f64;
                let beta = if s + 1 == sectors { TAU } else { TAU * (s + 1) as f64 / sectors as f64 };
                boxes.push(AnnularBox::new(w[0], w[1], alpha, beta)?);
            }
        }
        Ok(boxes)
    }
}

/// Number of zeros inside `bx`.
pub fn box_count(m: &ZeroMeasure, bx: &AnnularBox) -> usize {
    let lo = m.moduli.partition_point(|&r| r < bx.r_lo);
    let hi = m.moduli.partition_point(|&r| r <= bx.r_hi);
    m.args[lo..hi]
        .iter()
        .filter(|&&t| bx.alpha <= t && t < bx.beta)
        .count()
}

/// Mass the limiting measure (uniform on the unit circle) gives to `bx`:
/// `(beta - alpha) / 2pi` when the radial range contains 1, else 0.
pub fn arc_measure(bx: &AnnularBox) -> f64 {
    if bx.r_lo <= 1.0 && 1.0 <= bx.r_hi {
        (bx.beta - bx.alpha) / TAU
    } else {
        0.0
    }
}

/// `(1/n) sum_j e^{i l theta_j}`.
pub fn weyl_sum(m: &ZeroMeasure, l: u32) -> Result<Complex64> {
    if l == 0 {
        return Err(Error::InvalidArgument("Weyl sum order must be at least 1".into()));
    }
    if m.n() == 0 {
        return Err(Error::InvalidArgument("empty zero set".into()));
    }
    let lf = l as f64;
    let total: Complex64 = m.args.iter().map(|&t| Complex64::from_polar(1.0, lf * t)).sum();
    Ok(total / m.n() as f64)
}

/// Kolmogorov–Smirnov distance between the empirical law of `theta / 2pi`
/// and the uniform law on `[0, 1]`.
pub fn ks_uniform_args(m: &ZeroMeasure) -> Result<f64> {
    let n = m.n();
    if n == 0 {
        return Err(Error::InvalidArgument("empty zero set".into()));
    }
    let mut u: Vec<f64> = m.args.iter().map(|t| t / TAU).collect();
    u.sort_by(f64::total_cmp);
    let nf = n as f64;
    let d = u.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let above = (i + 1) as f64 / nf - x;
        let below = x - i as f64 / nf;
        d.max(above).max(below)
    });
    Ok(d)
}
