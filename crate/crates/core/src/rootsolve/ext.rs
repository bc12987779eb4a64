//! Complex numbers with an extended binary exponent.
//!
//! Coefficients drawn from laws with infinite logarithmic moment routinely
//! exceed `f64::MAX`, and so do the zeros of the resulting polynomials. An
//! [`ExtComplex`] stores `mant * 2^exp` with `max(|re|, |im|)` in `[0.5, 1)`,
//! which keeps every product and quotient of the solver in range.

use std::cmp::Ordering;
use std::f64::consts::{LN_2, TAU};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// `mant * 2^exp`. Zero is stored as `mant = 0, exp = 0`.
#[derive(Clone, Copy, PartialEq)]
pub struct ExtComplex {
    mant: Complex64,
    exp: i64,
}

#[inline]
fn pow2(k: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&k));
    f64::from_bits(((k + 1023) as u64) << 52)
}

/// `x * 2^k` for any `k`, saturating to zero or infinity.
#[inline]
pub(crate) fn ldexp(x: f64, k: i64) -> f64 {
    if (-1022..=1023).contains(&k) {
        return x * pow2(k);
    }
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mut x = x;
    let mut k = k.clamp(-2300, 2300);
    while k > 1023 {
        x *= pow2(1023);
        k -= 1023;
    }
    while k < -1022 {
        x *= pow2(-1022);
        k += 1022;
    }
    x * pow2(k)
}

/// Exponent `k` with `a = f * 2^k`, `f` in `[0.5, 1)`. `a` must be positive and finite.
#[inline]
fn frexp_exp(a: f64) -> i64 {
    let biased = ((a.to_bits() >> 52) & 0x7ff) as i64;
    if biased == 0 {
        return frexp_exp(a * pow2(64)) - 64;
    }
    biased - 1022
}

impl ExtComplex {
    pub const ZERO: ExtComplex = ExtComplex {
        mant: Complex64::new(0.0, 0.0),
        exp: 0,
    };
    pub const ONE: ExtComplex = ExtComplex {
        mant: Complex64::new(0.5, 0.0),
        exp: 1,
    };

    #[inline]
    fn normalized(mant: Complex64, exp: i64) -> Self {
        if !(mant.re.is_finite() && mant.im.is_finite()) {
            return ExtComplex { mant, exp };
        }
        let a = mant.re.abs().max(mant.im.abs());
        if a == 0.0 {
            return Self::ZERO;
        }
        let k = frexp_exp(a);
        ExtComplex {
            mant: Complex64::new(ldexp(mant.re, -k), ldexp(mant.im, -k)),
            exp: exp + k,
        }
    }

    pub fn new(re: f64, im: f64) -> Self {
        Self::normalized(Complex64::new(re, im), 0)
    }

    pub fn from_real(x: f64) -> Self {
        Self::new(x, 0.0)
    }

    /// `exp(ln_r) * e^{i theta}` without forming `exp(ln_r)` in `f64`.
    pub fn from_polar_ln(ln_r: f64, theta: f64) -> Self {
        Self::from_polar_log2(ln_r / LN_2, theta)
    }

    /// `2^log2_r * e^{i theta}`.
    pub fn from_polar_log2(log2_r: f64, theta: f64) -> Self {
        if log2_r == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        if !log2_r.is_finite() {
            return ExtComplex {
                mant: Complex64::new(f64::INFINITY, 0.0),
                exp: 0,
            };
        }
        let e = log2_r.floor();
        let r = (log2_r - e).exp2();
        Self::normalized(Complex64::from_polar(r, theta), e as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.re == 0.0 && self.mant.im == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.mant.re.is_finite() && self.mant.im.is_finite()
    }

    /// Nearest `Complex64`; saturates to zero or infinity out of range.
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(ldexp(self.mant.re, self.exp), ldexp(self.mant.im, self.exp))
    }

    /// `log2 |z|`, `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mant.norm().log2() + self.exp as f64
    }

    /// `ln |z|`, `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        self.log2_abs() * LN_2
    }

    /// `|z|` as `f64`, saturating.
    pub fn abs_f64(&self) -> f64 {
        ldexp(self.mant.norm(), self.exp)
    }

    /// `ln(1 + |z|)` for arbitrarily large `|z|`.
    pub fn ln_1p_abs(&self) -> f64 {
        let l = self.ln_abs();
        if l < 30.0 {
            self.abs_f64().ln_1p()
        } else {
            l + (-l).exp().ln_1p()
        }
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> f64 {
        self.mant.arg()
    }

    /// Argument mapped into `[0, 2pi)`.
    pub fn arg_2pi(&self) -> f64 {
        wrap_angle(self.arg())
    }

    /// `|z|` as a (nonnegative real) `ExtComplex`.
    pub fn abs(&self) -> Self {
        Self::normalized(Complex64::new(self.mant.norm(), 0.0), self.exp)
    }

    pub fn conj(&self) -> Self {
        ExtComplex {
            mant: self.mant.conj(),
            exp: self.exp,
        }
    }

    pub fn recip(&self) -> Self {
        Self::normalized(self.mant.inv(), -self.exp)
    }

    /// `|self| / |other|` as `f64`, saturating.
    pub fn abs_ratio(&self, other: &Self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        ldexp(self.mant.norm() / other.mant.norm(), self.exp - other.exp)
    }

    /// `|z| > 1`.
    pub fn exceeds_one(&self) -> bool {
        // |mant| lies in [0.5, sqrt 2)
        match self.exp {
            e if e >= 2 => true,
            1 => self.mant.norm_sqr() > 0.25,
            0 => self.mant.norm_sqr() > 1.0,
            _ => false,
        }
    }

    /// Multiply by `2^k` exactly.
    pub fn scale_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return *self;
        }
        ExtComplex {
            mant: self.mant,
            exp: self.exp + k,
        }
    }

    /// Total order by modulus, then by argument in `[0, 2pi)`.
    pub fn cmp_modulus_arg(&self, other: &Self) -> Ordering {
        self.log2_abs()
            .total_cmp(&other.log2_abs())
            .then_with(|| self.arg_2pi().total_cmp(&other.arg_2pi()))
    }
}

/// Map an angle from `(-pi, pi]` into `[0, 2pi)`.
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let mut a = a;
    if a < 0.0 {
        a += TAU;
    }
    if a >= TAU {
        a -= TAU;
    }
    // normalizes -0.0
    a + 0.0
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        Self::normalized(z, 0)
    }
}

impl From<f64> for ExtComplex {
    fn from(x: f64) -> Self {
        Self::from_real(x)
    }
}

impl fmt::Debug for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)*2^{}", self.mant.re, self.mant.im, self.exp)
    }
}

impl Mul for ExtComplex {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Div for ExtComplex {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        Self::normalized(self.mant / rhs.mant, self.exp - rhs.exp)
    }
}

impl Add for ExtComplex {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exp >= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = small.exp - big.exp;
        if shift < -60 {
            return big;
        }
        let f = pow2(shift);
        Self::normalized(
            Complex64::new(big.mant.re + small.mant.re * f, big.mant.im + small.mant.im * f),
            big.exp,
        )
    }
}

impl Neg for ExtComplex {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        ExtComplex {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

impl Sub for ExtComplex {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_and_zero() {
        assert_eq!(ExtComplex::ONE.to_complex64(), Complex64::new(1.0, 0.0));
        assert!(ExtComplex::ZERO.is_zero());
        assert_eq!(ExtComplex::from_real(0.0), ExtComplex::ZERO);
    }

    #[test]
    fn huge_values_survive_products() {
        let big = ExtComplex::from_polar_ln(5000.0, 0.3);
        let small = ExtComplex::from_polar_ln(-4990.0, -0.3);
        let prod = (big * small).to_complex64();
        assert!((prod.re - 10f64.exp()).abs() < 1e-9 * 10f64.exp());
        assert!(prod.im.abs() < 1e-9);
        assert!((big.ln_abs() - 5000.0).abs() < 1e-9);
        assert_eq!(big.to_complex64().re, f64::INFINITY);
        assert!((big.ln_1p_abs() - 5000.0).abs() < 1e-9);
    }

    #[test]
    fn subnormal_inputs_normalize() {
        let tiny = ExtComplex::from_real(5e-324);
        assert!((tiny.log2_abs() + 1074.0).abs() < 1e-12);
        assert_eq!(tiny.to_complex64().re, 5e-324);
    }

    #[test]
    fn exceeds_one_boundary() {
        assert!(!ExtComplex::ONE.exceeds_one());
        assert!(ExtComplex::from_real(1.0000001).exceeds_one());
        assert!(!ExtComplex::new(0.0, -0.999).exceeds_one());
        assert!(ExtComplex::new(0.8, 0.8).exceeds_one());
    }

    #[test]
    fn arg_wraps_into_half_open_turn() {
        assert_eq!(ExtComplex::new(1.0, -0.0).arg_2pi(), 0.0);
        let a = ExtComplex::new(0.0, -1.0).arg_2pi();
        assert!((a - 1.5 * std::f64::consts::PI).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn arithmetic_matches_complex64(
            ar in -1e3f64..1e3, ai in -1e3f64..1e3,
            br in -1e3f64..1e3, bi in -1e3f64..1e3,
        ) {
            let (a, b) = (Complex64::new(ar, ai), Complex64::new(br, bi));
            let (ea, eb) = (ExtComplex::from(a), ExtComplex::from(b));
            let scale = 1.0 + a.norm() * b.norm() + a.norm() + b.norm();
            prop_assert!(((ea + eb).to_complex64() - (a + b)).norm() <= 1e-13 * scale);
            prop_assert!(((ea - eb).to_complex64() - (a - b)).norm() <= 1e-13 * scale);
            prop_assert!(((ea * eb).to_complex64() - a * b).norm() <= 1e-13 * scale);
            if b.norm() > 1e-3 {
                let q = a / b;
                prop_assert!(((ea / eb).to_complex64() - q).norm() <= 1e-12 * (1.0 + q.norm()));
            }
        }
    }
}
