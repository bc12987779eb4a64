use num_complex::Complex64;

use super::ext::ExtComplex;
use crate::error::{Error, Result};

/// Complex polynomial `c_0 + c_1 z + ... + c_n z^n` with its trimming indices.
///
/// `effective_top` is the highest index with a nonzero coefficient and
/// `origin_order` the lowest; the polynomial has exactly `origin_order`
/// zeros at the origin and `effective_top` zeros in total.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<ExtComplex>,
    effective_top: usize,
    origin_order: usize,
}

impl Polynomial {
    /// Build from extended-range coefficients, ascending in power.
    pub fn from_ext(coeffs: Vec<ExtComplex>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        let effective_top = coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        let origin_order = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            coeffs,
            effective_top,
            origin_order,
        })
    }

    pub fn new(coeffs: &[Complex64]) -> Result<Self> {
        Self::from_ext(coeffs.iter().map(|&c| ExtComplex::from(c)).collect())
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::from_ext(coeffs.iter().map(|&c| ExtComplex::from_real(c)).collect())
    }

    /// Nominal degree `n` (length minus one), including zero leading terms.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn effective_top(&self) -> usize {
        self.effective_top
    }

    pub fn origin_order(&self) -> usize {
        self.origin_order
    }

    pub fn coeffs(&self) -> &[ExtComplex] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ExtComplex {
        self.coeffs.get(k).copied().unwrap_or(ExtComplex::ZERO)
    }

    /// Coefficients as `Complex64`, or an error if any is out of range.
    pub fn to_complex64(&self) -> Result<Vec<Complex64>> {
        self.coeffs
            .iter()
            .map(|c| {
                let z = c.to_complex64();
                if z.re.is_finite() && z.im.is_finite() {
                    Ok(z)
                } else {
                    Err(Error::Overflow(format!("coefficient {c:?}")))
                }
            })
            .collect()
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.to_complex64().im == 0.0 || c.is_zero())
    }

    /// Coefficients `c_{origin_order} .. c_{effective_top}`: the polynomial with
    /// its origin zeros and vanishing leading terms removed.
    pub fn trimmed(&self) -> &[ExtComplex] {
        &self.coeffs[self.origin_order..=self.effective_top]
    }

    /// Horner evaluation in extended range.
    pub fn eval(&self, z: ExtComplex) -> ExtComplex {
        self.coeffs
            .iter()
            .rev()
            .fold(ExtComplex::ZERO, |acc, &c| acc * z + c)
    }

    /// `|P(z)| / sum_j |c_j| |z|^j`, the componentwise backward error of `z` as a root.
    pub fn relative_residual(&self, z: ExtComplex) -> f64 {
        let az = z.abs();
        let (p, s) = self
            .coeffs
            .iter()
            .rev()
            .fold((ExtComplex::ZERO, ExtComplex::ZERO), |(p, s), &c| {
                (p * z + c, s * az + c.abs())
            });
        p.abs_ratio(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimming_indices() {
        let p = Polynomial::from_real(&[0.0, 0.0, 3.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.effective_top(), 4);
        assert_eq!(p.origin_order(), 2);
        assert_eq!(p.trimmed().len(), 3);
    }

    #[test]
    fn all_zero_rejected() {
        assert_eq!(
            Polynomial::from_real(&[0.0, 0.0]).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn residual_is_zero_at_exact_root() {
        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.relative_residual(ExtComplex::from_real(1.0)), 0.0);
        let r = p.relative_residual(ExtComplex::from_real(2.0));
        assert!((r - 3.0 / 5.0).abs() < 1e-15);
    }
}
