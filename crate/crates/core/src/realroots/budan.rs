//! Sign changes of derivative sequences and the Budan–Fourier bound.

use super::poly::RealPoly;
use crate::error::{Error, Result};

/// A finite real sequence whose sign changes are counted.
#[derive(Debug, Clone, PartialEq)]
pub struct SignSequence {
    pub values: Vec<f64>,
}

/// Number of sign changes: zero entries are deleted first, then adjacent
/// entries of opposite sign are counted.
pub fn sign_changes(s: &SignSequence) -> usize {
    count_changes(s.values.iter().map(|&v| sign(v)))
}

pub(crate) fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Taylor coefficients `p^{(j)}(x) / j!`, `j = 0..=deg`, by repeated
/// synthetic division by `(t - x)`.
pub fn taylor_coefficients(p: &RealPoly, x: f64) -> Vec<f64> {
    let mut c = p.coeffs().to_vec();
    let n = c.len() - 1;
    for i in 0..n {
        for k in (i..n).rev() {
            c[k] += x * c[k + 1];
        }
    }
    c
}

pub(crate) fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// `Z_p(x)`: sign changes in `p(x), p'(x), ..., p^{(n)}(x)`.
///
/// Uses the Taylor coefficients directly; they differ from the derivatives
/// by the positive factors `j!`. Floating point: see [`super::exact::z_p`]
/// for a rounding-free count.
pub fn z_p(p: &RealPoly, x: f64) -> usize {
    count_changes(taylor_coefficients(p, x).into_iter().map(sign))
}

/// `[p(x), p'(x), ..., p^{(n)}(x)]` and its sign-change count.
///
/// Past degree 170 the factorials overflow and entries saturate to
/// `+-inf`; their signs, which are all the count uses, stay exact.
pub fn derivative_sign_sequence(p: &RealPoly, x: f64) -> Result<(SignSequence, usize)> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let t = taylor_coefficients(p, x);
    let mut factorial = 1.0;
    let values = t
        .iter()
        .enumerate()
        .map(|(j, &c)| {
            if j > 0 {
                factorial *= j as f64;
            }
            if c == 0.0 {
                0.0
            } else {
                c * factorial
            }
        })
        .collect();
    let seq = SignSequence { values };
    let z = sign_changes(&seq);
    Ok((seq, z))
}

/// `Z_p(a) - Z_p(b)`: an upper bound on the number of zeros of `p` in
/// `(a, b)` (counted with multiplicity) that exceeds it by an even number.
pub fn budan_fourier_bound(p: &RealPoly, a: f64, b: f64) -> Result<i64> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidInterval { lo: a, hi: b });
    }
    for x in [a, b] {
        if p.eval(x) == 0.0 {
            return Err(Error::EndpointRoot(x));
        }
    }
    Ok(z_p(p, a) as i64 - z_p(p, b) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[f64]) -> SignSequence {
        SignSequence { values: v.to_vec() }
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(sign_changes(&seq(&[1.0, -1.0, 1.0])), 2);
        assert_eq!(sign_changes(&seq(&[1.0, 0.0, -1.0])), 1);
        assert_eq!(sign_changes(&seq(&[0.0, 0.0, 0.0])), 0);
        assert_eq!(sign_changes(&seq(&[])), 0);
        assert_eq!(sign_changes(&seq(&[-2.0, 0.0, 0.0, -1.0, 3.0])), 1);
    }

    #[test]
    fn derivative_sequences_of_x2_minus_1() {
        let p = RealPoly::new(vec![-1.0, 0.0, 1.0]);
        let (s, z) = derivative_sign_sequence(&p, -2.0).unwrap();
        assert_eq!(s.values, vec![3.0, -4.0, 2.0]);
        assert_eq!(z, 2);
        let (s, z) = derivative_sign_sequence(&p, 2.0).unwrap();
        assert_eq!(s.values, vec![3.0, 4.0, 2.0]);
        assert_eq!(z, 0);
    }

    #[test]
    fn beyond_cauchy_bound_no_changes() {
        let p = RealPoly::new(vec![3.0, -7.0, 0.5, 2.0, -1.0, 4.0]);
        let x = p.cauchy_bound().unwrap() + 1.0;
        assert_eq!(derivative_sign_sequence(&p, x).unwrap().1, 0);
        // and all the way left every sign alternates
        assert_eq!(derivative_sign_sequence(&p, -x).unwrap().1, 5);
    }

    #[test]
    fn budan_examples() {
        let p = RealPoly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(budan_fourier_bound(&p, -2.0, 2.0).unwrap(), 2);
        let q = RealPoly::new(vec![1.0, 0.0, 1.0]);
        assert_eq!(derivative_sign_sequence(&q, -2.0).unwrap().0.values, vec![5.0, -4.0, 2.0]);
        assert_eq!(budan_fourier_bound(&q, -2.0, 2.0).unwrap(), 2);
        let cube = RealPoly::new(vec![0.0, 0.0, 0.0, 1.0]);
        let (s, z) = derivative_sign_sequence(&cube, -1.0).unwrap();
        assert_eq!(s.values, vec![-1.0, 3.0, -6.0, 6.0]);
        assert_eq!(z, 3);
        assert_eq!(budan_fourier_bound(&cube, -1.0, 2.0).unwrap(), 3);
    }

    #[test]
    fn budan_errors() {
        let p = RealPoly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(budan_fourier_bound(&p, 1.0, 2.0).unwrap_err(), Error::EndpointRoot(1.0));
        assert!(budan_fourier_bound(&p, 2.0, 1.0).is_err());
        assert!(derivative_sign_sequence(&RealPoly::new(vec![4.0]), 1.0).is_err());
    }

    #[test]
    fn high_degree_sequence_saturates_but_keeps_signs() {
        let mut c = vec![0.0; 201];
        c[200] = 1.0;
        c[0] = -1.0;
        let (s, z) = derivative_sign_sequence(&RealPoly::new(c), -1.5).unwrap();
        assert!(s.values[200].is_infinite() && s.values[200] > 0.0);
        assert_eq!(z, 200);
    }
}
