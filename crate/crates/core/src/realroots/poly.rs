use crate::error::{Error, Result};

/// Real polynomial, coefficients ascending in power. Trailing zeros are
/// dropped, so `degree` is the true degree (0 for constants and for zero).
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPoly { coeffs }
    }

    /// Checked constructor: rejects empty input and non-finite values.
    pub fn from_f64(coeffs: &[f64]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(RealPoly::new(coeffs.to_vec()))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return RealPoly::new(vec![0.0]);
        }
        RealPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * (k + 1) as f64)
                .collect(),
        )
    }

    /// `x^d p(1/x)` for `p = x^a q`, `q(0) != 0`, `d = deg q`: the zeros are
    /// the reciprocals of the nonzero zeros of `p`.
    pub fn reversed(&self) -> Self {
        let (_, q) = self.split_origin();
        let mut c = q.coeffs;
        c.reverse();
        RealPoly::new(c)
    }

    /// `p(-x)`.
    pub fn reflected(&self) -> Self {
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// Split `p = x^a q` with `q(0) != 0`; returns `(a, q)`.
    pub fn split_origin(&self) -> (usize, Self) {
        let a = self.coeffs.iter().take_while(|&&c| c == 0.0).count();
        if a == self.coeffs.len() {
            return (0, self.clone());
        }
        (a, RealPoly::new(self.coeffs[a..].to_vec()))
    }

    /// `1 + max_k |c_k / c_d|`: every zero has smaller modulus.
    pub fn cauchy_bound(&self) -> Result<f64> {
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let lead = self.leading().abs();
        let m = self.coeffs[..self.degree()]
            .iter()
            .map(|c| c.abs() / lead)
            .fold(0.0, f64::max);
        Ok(1.0 + m)
    }
}

/// Sign of `p(x)` with an a-priori certificate: `None` when the computed
/// magnitude is within the Horner rounding bound, so its sign cannot be
/// trusted. For `|x| > 1` the reversed polynomial is evaluated at `1/x`, so
/// large arguments never overflow.
pub(crate) fn certified_sign(coeffs: &[f64], x: f64) -> Option<i8> {
    let n = coeffs.len() - 1;
    let (v, s) = if x.abs() <= 1.0 {
        let ax = x.abs();
        coeffs
            .iter()
            .rev()
            .fold((0.0, 0.0), |(v, s), &c| (v * x + c, s * ax + c.abs()))
    } else {
        let w = 1.0 / x;
        let aw = w.abs();
        let (v, s) = coeffs
            .iter()
            .fold((0.0, 0.0), |(v, s), &c| (v * w + c, s * aw + c.abs()));
        // p(x) = x^n q(1/x)
        let flip = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        (flip * v, s)
    };
    let bound = (2 * n + 4) as f64 * f64::EPSILON * s;
    if v.abs() <= bound {
        None
    } else if v > 0.0 {
        Some(1)
    } else {
        Some(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_reflection_split() {
        let p = RealPoly::new(vec![0.0, 0.0, 2.0, -3.0, 1.0]);
        let (a, q) = p.split_origin();
        assert_eq!(a, 2);
        assert_eq!(q.coeffs(), &[2.0, -3.0, 1.0]);
        assert_eq!(p.reversed().coeffs(), &[1.0, -3.0, 2.0]);
        assert_eq!(q.reflected().coeffs(), &[2.0, 3.0, 1.0]);
        assert_eq!(q.derivative().coeffs(), &[-3.0, 2.0]);
        assert_eq!(RealPoly::new(vec![1.0, 2.0, 0.0, 0.0]).degree(), 1);
    }

    #[test]
    fn certified_sign_far_out() {
        let c = [-1.0, 0.0, 1.0];
        assert_eq!(certified_sign(&c, 1e200), Some(1));
        assert_eq!(certified_sign(&c, -1e200), Some(1));
        assert_eq!(certified_sign(&[0.0, 0.0, 0.0, 1.0], -1e200), Some(-1));
        assert_eq!(certified_sign(&c, 1.0), None);
        assert_eq!(certified_sign(&c, 0.0), Some(-1));
    }

    #[test]
    fn checked_constructor() {
        assert!(RealPoly::from_f64(&[]).is_err());
        assert!(RealPoly::from_f64(&[1.0, f64::NAN]).is_err());
        assert!(RealPoly::new(vec![0.0, 0.0]).is_zero());
    }
}
