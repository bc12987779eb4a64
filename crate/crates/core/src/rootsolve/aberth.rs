//! Aberth–Ehrlich simultaneous iteration.
//!
//! The iteration runs on a trimmed polynomial (nonzero constant and leading
//! coefficients). Each sweep updates the roots in place (Gauss–Seidel order):
//!
//! ```text
//! z_i <- z_i - 1 / (P'(z_i)/P(z_i) - sum_{j != i} 1/(z_i - z_j))
//! ```
//!
//! For `|z| > 1` the logarithmic derivative is taken from the reversed
//! polynomial at `1/z`, so evaluation never overflows on scaled inputs.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::ext::ExtComplex;

pub(crate) trait Field:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const ZERO: Self;
    fn from_ext(z: ExtComplex) -> Self;
    fn real(x: f64) -> Self;
    fn is_zero(self) -> bool;
    fn abs(self) -> Self;
    fn recip(self) -> Self;
    /// Quotient that stays accurate when `|other|^2` would underflow.
    fn quot(self, other: Self) -> Self;
    fn abs_ratio(self, other: Self) -> f64;
    fn exceeds_one(self) -> bool;
    fn is_finite(self) -> bool;
}

/// Smith's complex division.
#[inline]
fn smith_div(a: Complex64, b: Complex64) -> Complex64 {
    if b.re.abs() >= b.im.abs() {
        let r = b.im / b.re;
        let den = b.re + b.im * r;
        Complex64::new((a.re + a.im * r) / den, (a.im - a.re * r) / den)
    } else {
        let r = b.re / b.im;
        let den = b.re * r + b.im;
        Complex64::new((a.re * r + a.im) / den, (a.im * r - a.re) / den)
    }
}

impl Field for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    #[inline]
    fn from_ext(z: ExtComplex) -> Self {
        z.to_complex64()
    }
    #[inline]
    fn real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    #[inline]
    fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    #[inline]
    fn abs(self) -> Self {
        Complex64::new(self.norm(), 0.0)
    }
    #[inline]
    fn recip(self) -> Self {
        let n = self.norm_sqr();
        if n > 1e-300 && n < 1e300 {
            let inv = 1.0 / n;
            Complex64::new(self.re * inv, -self.im * inv)
        } else {
            smith_div(Complex64::new(1.0, 0.0), self)
        }
    }
    #[inline]
    fn quot(self, other: Self) -> Self {
        smith_div(self, other)
    }
    #[inline]
    fn abs_ratio(self, other: Self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.norm() / other.norm()
        }
    }
    #[inline]
    fn exceeds_one(self) -> bool {
        self.norm_sqr() > 1.0
    }
    #[inline]
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Field for ExtComplex {
    const ZERO: Self = ExtComplex::ZERO;
    #[inline]
    fn from_ext(z: ExtComplex) -> Self {
        z
    }
    #[inline]
    fn real(x: f64) -> Self {
        ExtComplex::from_real(x)
    }
    #[inline]
    fn is_zero(self) -> bool {
        ExtComplex::is_zero(&self)
    }
    #[inline]
    fn abs(self) -> Self {
        ExtComplex::abs(&self)
    }
    #[inline]
    fn recip(self) -> Self {
        ExtComplex::recip(&self)
    }
    #[inline]
    fn quot(self, other: Self) -> Self {
        self / other
    }
    #[inline]
    fn abs_ratio(self, other: Self) -> f64 {
        ExtComplex::abs_ratio(&self, &other)
    }
    #[inline]
    fn exceeds_one(self) -> bool {
        ExtComplex::exceeds_one(&self)
    }
    #[inline]
    fn is_finite(self) -> bool {
        ExtComplex::is_finite(&self)
    }
}

/// Logarithmic derivative `P'(z)/P(z)` (None when `P(z) == 0`) and the
/// backward error `|P(z)| / sum |c_j||z|^j`.
#[inline]
pub(crate) fn log_derivative<F: Field>(coeffs: &[F], abs_coeffs: &[F], z: F) -> (Option<F>, f64) {
    let n = coeffs.len() - 1;
    if !z.exceeds_one() {
        let az = z.abs();
        let mut p = coeffs[n];
        let mut dp = F::ZERO;
        let mut s = abs_coeffs[n];
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + coeffs[k];
            s = s * az + abs_coeffs[k];
        }
        let res = p.abs_ratio(s);
        if p.is_zero() {
            (None, res)
        } else {
            (Some(dp.quot(p)), res)
        }
    } else {
        // P(z) = z^n Q(w), w = 1/z, Q the reversed polynomial:
        // P'/P = w (n - w Q'(w)/Q(w)).
        let w = z.recip();
        let aw = w.abs();
        let mut q = coeffs[0];
        let mut dq = F::ZERO;
        let mut s = abs_coeffs[0];
        for k in 1..=n {
            dq = dq * w + q;
            q = q * w + coeffs[k];
            s = s * aw + abs_coeffs[k];
        }
        let res = q.abs_ratio(s);
        if q.is_zero() {
            (None, res)
        } else {
            (Some(w * (F::real(n as f64) - w * dq.quot(q))), res)
        }
    }
}

/// Starting points on concentric circles whose radii come from the upper
/// convex hull of `(k, log2 |c_k|)`.
pub(crate) fn initial_guesses<F: Field>(coeffs: &[ExtComplex]) -> Vec<F> {
    let n = coeffs.len() - 1;
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.log2_abs()))
        .collect();

    let mut hull: Vec<(usize, f64)> = Vec::with_capacity(pts.len());
    for &pt in &pts {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            // drop the middle point unless it lies strictly above the chord
            let cross = (k2 as f64 - k1 as f64) * (pt.1 - l1) - (l2 - l1) * (pt.0 as f64 - k1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    // irrational rotation keeps the start off any symmetry axis of the input
    const SIGMA: f64 = 0.7;
    let mut guesses = Vec::with_capacity(n);
    for (edge, w) in hull.windows(2).enumerate() {
        let (k1, l1) = w[0];
        let (k2, l2) = w[1];
        let m = k2 - k1;
        let log2_r = (l1 - l2) / m as f64;
        let offset = TAU * edge as f64 / n as f64 + SIGMA;
        for j in 0..m {
            let theta = TAU * j as f64 / m as f64 + offset;
            guesses.push(F::from_ext(ExtComplex::from_polar_log2(log2_r, theta)));
        }
    }
    debug_assert_eq!(guesses.len(), n);
    guesses
}

pub(crate) struct AberthOutcome<F> {
    pub roots: Vec<F>,
    pub residuals: Vec<f64>,
    pub iterations: usize,
}

/// Run the iteration from `roots` until every root is frozen or `max_iter`
/// sweeps have been made. A root freezes once its backward error reaches a
/// few ulps, or is below `tol` and either stopped improving or produced a
/// rounding-level step.
pub(crate) fn aberth<F: Field>(coeffs: &[F], mut roots: Vec<F>, tol: f64, max_iter: usize) -> AberthOutcome<F> {
    let n = roots.len();
    debug_assert_eq!(n + 1, coeffs.len());
    let abs_coeffs: Vec<F> = coeffs.iter().map(|c| c.abs()).collect();
    let eps = f64::EPSILON;

    let mut frozen = vec![false; n];
    let mut prev_res = vec![f64::INFINITY; n];
    let mut active = n;
    let mut iterations = 0;

    while active > 0 && iterations < max_iter {
        iterations += 1;
        for i in 0..n {
            if frozen[i] {
                continue;
            }
            let zi = roots[i];
            let (ld, res) = log_derivative(coeffs, &abs_coeffs, zi);
            let Some(ld) = ld else {
                frozen[i] = true;
                active -= 1;
                continue;
            };
            let mut s = F::ZERO;
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    let d = zi - zj;
                    if !d.is_zero() {
                        s = s + d.recip();
                    }
                }
            }
            let denom = ld - s;
            let step = if denom.is_zero() { F::ZERO } else { denom.recip() };
            if step.is_finite() {
                roots[i] = zi - step;
            }
            let rel_step = step.abs_ratio(zi);
            // a tiny step alone is not enough: an iterate sitting next to
            // another one gets a tiny step from the repulsion term
            let settled = rel_step <= 4.0 * eps || res >= 0.5 * prev_res[i];
            if res <= 4.0 * eps || (res <= tol && settled) {
                frozen[i] = true;
                active -= 1;
            }
            prev_res[i] = res;
        }
    }

    let residuals = roots
        .iter()
        .map(|&z| log_derivative(coeffs, &abs_coeffs, z).1)
        .collect();
    AberthOutcome {
        roots,
        residuals,
        iterations,
    }
}
