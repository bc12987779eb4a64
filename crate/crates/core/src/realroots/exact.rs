//! Rounding-free counts on integer polynomials.
//!
//! Every finite `f64` is a dyadic rational `m 2^e`. A polynomial with `f64`
//! coefficients is therefore a power of two times an integer polynomial, and
//! an `f64` point is `a / 2^k`, so signs of values and of Taylor coefficients
//! can be computed in big integers with no rounding at all.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::budan::count_changes;
use super::poly::RealPoly;
use crate::error::{Error, Result};

/// `(m, e)` with `x = m 2^e` exactly.
fn decompose(x: f64) -> (i64, i64) {
    if x == 0.0 {
        return (0, 0);
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    let (m, e) = if biased == 0 {
        (frac, -1074)
    } else {
        (frac | (1i64 << 52), biased - 1075)
    };
    let m = if x < 0.0 { -m } else { m };
    // strip trailing zero bits to keep the integers small
    let tz = m.trailing_zeros() as i64;
    (m >> tz, e + tz)
}

/// `num / 2^k`.
#[derive(Debug, Clone)]
struct Dyadic {
    num: BigInt,
    k: usize,
}

impl Dyadic {
    fn from_f64(x: f64) -> Self {
        let (m, e) = decompose(x);
        if e >= 0 {
            Dyadic {
                num: BigInt::from(m) << e as usize,
                k: 0,
            }
        } else {
            Dyadic {
                num: BigInt::from(m),
                k: (-e) as usize,
            }
        }
    }
}

/// Integer polynomial, ascending, trimmed; zero is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    /// A positive power-of-two multiple of `p` with integer coefficients.
    pub(crate) fn from_real(p: &RealPoly) -> Self {
        let parts: Vec<(i64, i64)> = p.coeffs().iter().map(|&c| decompose(c)).collect();
        let emin = parts
            .iter()
            .filter(|(m, _)| *m != 0)
            .map(|&(_, e)| e)
            .min()
            .unwrap_or(0);
        IntPoly::new(
            parts
                .into_iter()
                .map(|(m, e)| BigInt::from(m) << (e - emin) as usize)
                .collect(),
        )
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    fn leading(&self) -> &BigInt {
        &self.coeffs[self.coeffs.len() - 1]
    }

    fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return IntPoly::new(vec![]);
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(k + 1))
                .collect(),
        )
    }

    /// Divide by the (positive) gcd of the coefficients.
    fn primitive(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) });
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
        self
    }

    /// Coefficients of `2^{k d} p(y / 2^k)` in `y`.
    fn homogenized(&self, k: usize) -> Vec<BigInt> {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c << (k * (d - i)))
            .collect()
    }

    /// Sign of `p(x)`.
    fn sign_at(&self, x: &Dyadic) -> i8 {
        // 2^{kd} p(a/2^k) by Horner on the homogenized coefficients
        let d = self.degree();
        let mut v = self.coeffs[d].clone();
        for i in (0..d).rev() {
            v = v * &x.num + (&self.coeffs[i] << (x.k * (d - i)));
        }
        sign_of(&v)
    }

    /// Signs of the Taylor coefficients `p^{(j)}(x) / j!`, `j = 0..=d`.
    fn taylor_signs(&self, x: &Dyadic) -> Vec<i8> {
        // Taylor coefficients of the homogenized polynomial at the integer
        // `a` differ from those of `p` at `a/2^k` by the positive factors
        // `2^{k(d-j)}`.
        let mut c = self.homogenized(x.k);
        let n = c.len() - 1;
        for i in 0..n {
            for k in (i..n).rev() {
                let carry = &x.num * &c[k + 1];
                c[k] += carry;
            }
        }
        c.iter().map(sign_of).collect()
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// A positive multiple of `-rem(a, b)`, reduced to primitive form.
fn neg_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree();
    let lc = b.leading().clone();
    let mut r = a.coeffs.clone();
    let mut steps = 0usize;
    // lc^steps a = q b + r
    while r.len() > db {
        let top = r.len() - 1;
        let t = r[top].clone();
        if !t.is_zero() {
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[top - db + j] -= &t * bj;
            }
            steps += 1;
        }
        r.pop();
    }
    let flip = !(lc.is_negative() && steps % 2 == 1);
    let mut out = IntPoly::new(r);
    if flip {
        for c in &mut out.coeffs {
            *c = -std::mem::take(c);
        }
    }
    out.primitive()
}

/// Sturm chain with primitive integer members; every member is a positive
/// multiple of the corresponding member of the rational chain.
struct IntSturm {
    chain: Vec<IntPoly>,
}

impl IntSturm {
    fn new(p: IntPoly) -> Self {
        let dp = p.derivative().primitive();
        let mut chain = vec![p.primitive(), dp];
        loop {
            let k = chain.len();
            if chain[k - 1].degree() == 0 {
                break;
            }
            let r = neg_remainder(&chain[k - 2], &chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        IntSturm { chain }
    }

    fn variations(&self, x: &Dyadic) -> usize {
        count_changes(self.chain.iter().map(|m| m.sign_at(x)))
    }
}

fn nonconstant(p: &RealPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(())
}

fn check_interval(ip: &IntPoly, a: f64, b: f64) -> Result<(Dyadic, Dyadic)> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInterval { lo: a, hi: b });
    }
    let (da, db) = (Dyadic::from_f64(a), Dyadic::from_f64(b));
    if ip.sign_at(&da) == 0 {
        return Err(Error::EndpointRoot(a));
    }
    if ip.sign_at(&db) == 0 {
        return Err(Error::EndpointRoot(b));
    }
    Ok((da, db))
}

/// Distinct real zeros of `p` in `(a, b]`, in exact arithmetic.
pub fn sturm_count_exact(p: &RealPoly, a: f64, b: f64) -> Result<usize> {
    nonconstant(p)?;
    let ip = IntPoly::from_real(p);
    let (da, db) = check_interval(&ip, a, b)?;
    let chain = IntSturm::new(ip);
    Ok(chain.variations(&da) - chain.variations(&db))
}

/// Distinct real zeros of `p` on the whole line, in exact arithmetic.
/// Zeros at the origin count once.
pub fn count_real_roots_exact(p: &RealPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (origin, q) = p.split_origin();
    let at_origin = usize::from(origin > 0);
    if q.degree() == 0 {
        return Ok(at_origin);
    }
    let b = (1.0 + q.cauchy_bound()?).ceil();
    Ok(sturm_count_exact(&q, -b, b)? + at_origin)
}

/// `Z_p(x)` without rounding.
pub fn z_p_exact(p: &RealPoly, x: f64) -> usize {
    if p.is_zero() {
        return 0;
    }
    count_changes(IntPoly::from_real(p).taylor_signs(&Dyadic::from_f64(x)).into_iter())
}

/// `Z_p(a) - Z_p(b)` without rounding.
pub fn budan_fourier_bound_exact(p: &RealPoly, a: f64, b: f64) -> Result<i64> {
    nonconstant(p)?;
    let ip = IntPoly::from_real(p);
    let (da, db) = check_interval(&ip, a, b)?;
    let za = count_changes(ip.taylor_signs(&da).into_iter());
    let zb = count_changes(ip.taylor_signs(&db).into_iter());
    Ok(za as i64 - zb as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[f64]) -> RealPoly {
        RealPoly::new(c.to_vec())
    }

    #[test]
    fn decompose_is_exact() {
        for x in [1.0, -0.75, 3.0e-310, 1.5e300, 0.1, -7.0] {
            let (m, e) = decompose(x);
            assert_eq!(m as f64 * 2f64.powi(e as i32), x);
        }
        assert_eq!(decompose(0.0), (0, 0));
    }

    #[test]
    fn integer_scaling_keeps_ratios() {
        let ip = IntPoly::from_real(&rp(&[0.5, -0.25, 3.0]));
        let c: Vec<i64> = ip.coeffs.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(c, vec![2, -1, 12]);
    }

    #[test]
    fn signs_at_dyadic_points() {
        let ip = IntPoly::from_real(&rp(&[-1.0, 0.0, 1.0]));
        assert_eq!(ip.sign_at(&Dyadic::from_f64(0.5)), -1);
        assert_eq!(ip.sign_at(&Dyadic::from_f64(-1.0)), 0);
        assert_eq!(ip.sign_at(&Dyadic::from_f64(1.25)), 1);
        assert_eq!(ip.taylor_signs(&Dyadic::from_f64(-2.0)), vec![1, -1, 1]);
    }

    #[test]
    fn exact_counts() {
        assert_eq!(sturm_count_exact(&rp(&[-1.0, 0.0, 1.0]), -2.0, 2.0).unwrap(), 2);
        assert_eq!(sturm_count_exact(&rp(&[1.0, 0.0, 1.0]), -2.0, 2.0).unwrap(), 0);
        let cubic = rp(&[-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(sturm_count_exact(&cubic, 0.5, 2.5).unwrap(), 2);
        assert_eq!(sturm_count_exact(&cubic, 1.0, 2.5).unwrap_err(), Error::EndpointRoot(1.0));
        assert_eq!(count_real_roots_exact(&cubic).unwrap(), 3);
        // (x-1)^2 (x+2): distinct zeros
        assert_eq!(count_real_roots_exact(&rp(&[2.0, -3.0, 0.0, 1.0])).unwrap(), 2);
        assert_eq!(count_real_roots_exact(&rp(&[0.0, 1.0, 0.0, 1.0])).unwrap(), 1);
        assert_eq!(count_real_roots_exact(&rp(&[0.0, 0.0, 5.0])).unwrap(), 1);
    }

    #[test]
    fn close_roots_are_separated() {
        // (x - 1)(x - (1 + 2^-40))
        let e = 2f64.powi(-40);
        let p = rp(&[1.0 + e, -(2.0 + e), 1.0]);
        assert_eq!(count_real_roots_exact(&p).unwrap(), 2);
        assert_eq!(sturm_count_exact(&p, 1.0 + e / 2.0, 3.0).unwrap(), 1);
    }

    #[test]
    fn exact_budan() {
        let q = rp(&[1.0, 0.0, 1.0]);
        assert_eq!(budan_fourier_bound_exact(&q, -2.0, 2.0).unwrap(), 2);
        let cube = rp(&[0.0, 0.0, 0.0, 1.0]);
        assert_eq!(z_p_exact(&cube, -1.0), 3);
        assert_eq!(budan_fourier_bound_exact(&cube, -1.0, 2.0).unwrap(), 3);
    }
}
