//! Counting real zeros: sign changes, Budan–Fourier, Sturm chains, certified
//! counts from complex zeros, and the real projection of a complex
//! polynomial along a ray.

mod budan;
mod certify;
mod exact;
mod poly;
mod sturm;

use crate::error::{Error, Result};
use crate::rootsolve::Polynomial;

pub use budan::{budan_fourier_bound, derivative_sign_sequence, sign_changes, taylor_coefficients, z_p, SignSequence};
pub use exact::{budan_fourier_bound_exact, count_real_roots_exact, sturm_count_exact, z_p_exact};
pub use poly::RealPoly;
pub use sturm::{sturm_count, SturmChain, SturmCount};

/// How a real-zero count was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Inclusion disks around the complex zeros.
    Certified,
    /// Exact Sturm chain over the integers, after the disks were inconclusive.
    Exact,
}

/// Number of distinct real zeros and how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealRootCount {
    pub count: usize,
    pub method: CountMethod,
    /// Floating-point Sturm count of the same quantity.
    pub sturm: usize,
    /// Guarded re-evaluations made by the floating-point Sturm count.
    pub sturm_escalations: usize,
}

impl RealRootCount {
    /// Whether the exact fallback was needed.
    pub fn escalated(&self) -> bool {
        self.method == CountMethod::Exact
    }
}

/// `M`: distinct real zeros of `p` on the whole line.
///
/// Zeros at the origin count once whatever their multiplicity. The rest are
/// counted by a floating-point Sturm chain on `[-B, B]`, `B = 1 +` the
/// Cauchy bound, and independently certified with inclusion disks around
/// the complex zeros. The certified value is returned; when the disks cannot
/// decide (multiple or tightly clustered zeros) the count is redone exactly.
pub fn count_real_roots(p: &RealPoly) -> Result<RealRootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (origin, q) = p.split_origin();
    let at_origin = usize::from(origin > 0);
    if q.degree() == 0 {
        return Ok(RealRootCount {
            count: at_origin,
            method: CountMethod::Certified,
            sturm: at_origin,
            sturm_escalations: 0,
        });
    }
    let b = (1.0 + q.cauchy_bound()?).ceil();
    let s = sturm_count(&q, -b, b)?;
    let (count, method) = match certify::certified_real_count(&q) {
        Some(c) => (c, CountMethod::Certified),
        None => (sturm_count_exact(&q, -b, b)?, CountMethod::Exact),
    };
    Ok(RealRootCount {
        count: count + at_origin,
        method,
        sturm: s.count + at_origin,
        sturm_escalations: s.escalations,
    })
}

/// `e^{2 pi i num/den}` with exact values on the quarter turns.
fn unit_root(num: u64, den: u64) -> (f64, f64) {
    let num = num % den;
    if (4 * num) % den == 0 {
        return match 4 * num / den {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
    }
    let theta = std::f64::consts::TAU * num as f64 / den as f64;
    (theta.cos(), theta.sin())
}

/// `g(x) = sum_k x^k Re(xi_k e^{2 pi i k q / den})`: the real part of `P`
/// restricted to the ray of angle `2 pi q / den`, as a real polynomial.
pub fn ray_real_projection(p: &Polynomial, q: u64, den: u64) -> Result<RealPoly> {
    if den == 0 {
        return Err(Error::InvalidArgument("ray denominator must be positive".into()));
    }
    if q >= den {
        return Err(Error::InvalidArgument(format!("need 0 <= q < den, got {q}/{den}")));
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let z = c.to_complex64();
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::Overflow(format!("coefficient {k}")));
            }
            // k * q mod den without overflow
            let num = ((k as u128 * q as u128) % den as u128) as u64;
            let (cos, sin) = unit_root(num, den);
            Ok(z.re * cos - z.im * sin)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(RealPoly::new(coeffs))
}
