//! Complex root finding and the coefficient identities used to validate it.

mod aberth;
pub mod ext;
mod polynomial;

use num_complex::Complex64;

use crate::error::{Error, Result};
pub use ext::ExtComplex;
pub use polynomial::Polynomial;

use aberth::{aberth, initial_guesses, AberthOutcome};

/// Default backward-error tolerance for [`solve_roots`].
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default sweep limit for [`solve_roots`].
pub const DEFAULT_MAX_ITER: usize = 500;

/// Coefficient spread (in binary orders of magnitude) above which the
/// extended-exponent path is used instead of plain `f64`.
const F64_LOG2_RANGE: f64 = 600.0;

/// Zeros of a polynomial with per-root backward errors.
///
/// `roots` has `effective_top` entries: `origin_order` exact zeros followed by
/// the zeros of the trimmed polynomial, sorted by modulus and then argument.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<ExtComplex>,
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Whether the extended-exponent arithmetic path was used.
    pub extended: bool,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots converted to `Complex64` (saturating out of range).
    pub fn complex_roots(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.to_complex64()).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// All complex zeros of `p`, with multiplicity.
///
/// Each returned root satisfies `|P(z)| / sum_j |c_j||z|^j <= tol` when
/// `converged` is true. On failure to converge within `max_iter` sweeps the
/// best iterates are returned with `converged = false`.
pub fn solve_roots(p: &Polynomial, tol: f64, max_iter: usize) -> Result<RootSet> {
    if p.effective_top() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let trimmed = p.trimmed();
    let d = trimmed.len() - 1;

    let (core_roots, residuals, iterations, extended) = if d == 0 {
        (Vec::new(), Vec::new(), 0, false)
    } else if d == 1 {
        let z = -(trimmed[0] / trimmed[1]);
        let q = Polynomial::from_ext(trimmed.to_vec())?;
        (vec![z], vec![q.relative_residual(z)], 0, false)
    } else {
        let logs: Vec<f64> = trimmed
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.log2_abs())
            .collect();
        let hi = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = logs.iter().copied().fold(f64::INFINITY, f64::min);
        if hi - lo <= F64_LOG2_RANGE {
            // exact power-of-two scaling puts the largest coefficient near 1
            let shift = -(hi.floor() as i64);
            let scaled: Vec<ExtComplex> = trimmed.iter().map(|c| c.scale_pow2(shift)).collect();
            let coeffs: Vec<Complex64> = scaled.iter().map(|c| c.to_complex64()).collect();
            let start = initial_guesses::<Complex64>(&scaled);
            let AberthOutcome {
                roots,
                residuals,
                iterations,
            } = aberth(&coeffs, start, tol, max_iter);
            let roots = roots.into_iter().map(ExtComplex::from).collect();
            (roots, residuals, iterations, false)
        } else {
            let start = initial_guesses::<ExtComplex>(trimmed);
            let AberthOutcome {
                roots,
                residuals,
                iterations,
            } = aberth(trimmed, start, tol, max_iter);
            (roots, residuals, iterations, true)
        }
    };

    let mut pairs: Vec<(ExtComplex, f64)> = std::iter::repeat((ExtComplex::ZERO, 0.0))
        .take(p.origin_order())
        .chain(core_roots.into_iter().zip(residuals))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp_modulus_arg(&b.0));
    let converged = pairs.iter().all(|(z, r)| z.is_finite() && *r <= tol);
    let (roots, residuals) = pairs.into_iter().unzip();
    Ok(RootSet {
        roots,
        residuals,
        iterations,
        converged,
        extended,
    })
}

/// Power sums `sum_j z_j^{-l}`, `l = 1..=max_l`, from the coefficients alone.
///
/// The reciprocals of the zeros are the zeros of the reversed polynomial
/// `z^d + a_1 z^{d-1} + ... + a_d` with `a_k = c_k / c_0`, so Newton's
/// identities give `p_l = -(l a_l + sum_{k=1}^{l-1} a_k p_{l-k})`.
pub fn newton_power_sums(p: &Polynomial, max_l: usize) -> Result<Vec<Complex64>> {
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d = p.effective_top();
    if max_l == 0 || max_l > d {
        return Err(Error::InvalidArgument(format!(
            "power-sum order must lie in 1..={d}, got {max_l}"
        )));
    }
    let a: Vec<Complex64> = (0..=max_l).map(|k| (p.coeff(k) / c0).to_complex64()).collect();
    let mut sums: Vec<Complex64> = Vec::with_capacity(max_l);
    for l in 1..=max_l {
        let mut acc = a[l] * l as f64;
        for k in 1..l {
            acc += a[k] * sums[l - k - 1];
        }
        sums.push(-acc);
    }
    Ok(sums)
}

/// `|c_0 / c_n|`, which equals the product of the moduli of all `n` zeros.
pub fn vieta_modulus_product(p: &Polynomial) -> Result<f64> {
    let c0 = p.coeff(0);
    let cn = p.coeff(p.degree());
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if cn.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    Ok(c0.abs_ratio(&cn))
}

/// `min(1, |c_0| / (d * max_{k>=1} |c_k|))` with `d` the effective degree.
///
/// Inside this radius `|c_0|` dominates the sum of all other terms, so no
/// zero can lie there.
pub fn smallest_root_lower_bound(p: &Polynomial) -> Result<f64> {
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d = p.effective_top();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let max_tail = p.coeffs()[1..]
        .iter()
        .copied()
        .max_by(|a, b| a.log2_abs().total_cmp(&b.log2_abs()))
        .unwrap_or(ExtComplex::ZERO);
    let bound = c0.abs_ratio(&max_tail) / d as f64;
    Ok(bound.min(1.0))
}
