//! Real-zero counts certified from complex root approximations.
//!
//! For approximations `z_1..z_d` of the zeros of `q` (degree `d`, leading
//! coefficient `a`), put `W_k = q(z_k) / (a prod_{j != k} (z_k - z_j))`. Every
//! zero of `q` lies in the union of the disks `D_k = D(z_k, d |W_k|)`, and a
//! connected component made of `m` disks holds exactly `m` zeros. With real
//! coefficients the zero set is closed under conjugation, so an isolated disk
//! meeting the real axis whose mirror image meets no other disk holds exactly
//! one zero, which is real. A disk missing the axis holds no real zero.

use num_complex::Complex64;

use crate::rootsolve::{solve_roots, ExtComplex, Polynomial, DEFAULT_MAX_ITER};

use super::poly::RealPoly;

const EPS: f64 = f64::EPSILON;

/// `log2(2^a + 2^b)`.
fn log2_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp2().ln_1p() / std::f64::consts::LN_2
}

/// `log2` of the inclusion radius of each approximation; `None` when two
/// approximations coincide or a value is not finite.
fn log2_radii(coeffs: &[ExtComplex], roots: &[ExtComplex]) -> Option<Vec<f64>> {
    let d = roots.len();
    let lead = coeffs[d].log2_abs();
    // Horner rounding bound, generous for complex arithmetic
    let gamma = ((8 * d + 16) as f64 * EPS).log2();
    // relative error of the computed product and of the radius itself
    let slack = (1.0 + 1e-9 + 4.0 * d as f64 * EPS).log2();
    let mut out = Vec::with_capacity(d);
    for (k, &z) in roots.iter().enumerate() {
        if !z.is_finite() {
            return None;
        }
        let az = z.abs();
        let (v, s) = coeffs
            .iter()
            .rev()
            .fold((ExtComplex::ZERO, ExtComplex::ZERO), |(v, s), &c| {
                (v * z + c, s * az + c.abs())
            });
        let num = log2_add(v.log2_abs(), s.log2_abs() + gamma);
        let mut den = lead;
        for (j, &w) in roots.iter().enumerate() {
            if j != k {
                let l = (z - w).log2_abs();
                if !l.is_finite() {
                    return None;
                }
                den += l;
            }
        }
        let r = (d as f64).log2() + num - den + slack;
        if !r.is_finite() {
            return None;
        }
        out.push(r);
    }
    Some(out)
}

/// `f64` version of [`log2_radii`] for real coefficients and roots of
/// moderate size; `None` when anything leaves the safe range (the caller
/// then falls back to the extended-exponent version).
fn log2_radii_f64(coeffs: &[f64], roots: &[Complex64]) -> Option<Vec<f64>> {
    const BIG: f64 = 1e150;
    const SMALL: f64 = 1e-150;
    let d = roots.len();
    let lead = coeffs[d].abs().log2();
    let gamma = ((8 * d + 16) as f64 * EPS).log2();
    let slack = (1.0 + 1e-9 + 4.0 * d as f64 * EPS).log2();
    let mut out = Vec::with_capacity(d);
    for (k, &z) in roots.iter().enumerate() {
        let r = z.norm();
        if !(r.is_finite() && r < BIG) {
            return None;
        }
        // log2 |p(z)| and log2 sum |c_j||z|^j, through the reversed
        // polynomial outside the unit disk
        let (v, s, shift) = if r <= 1.0 {
            let (v, s) = coeffs
                .iter()
                .rev()
                .fold((Complex64::new(0.0, 0.0), 0.0), |(v, s), &c| (v * z + c, s * r + c.abs()));
            (v.norm(), s, 0.0)
        } else {
            let w = z.inv();
            let rw = 1.0 / r;
            let (v, s) = coeffs
                .iter()
                .fold((Complex64::new(0.0, 0.0), 0.0), |(v, s), &c| (v * w + c, s * rw + c.abs()));
            (v.norm(), s, d as f64 * r.log2())
        };
        if !(s.is_finite() && v.is_finite()) {
            return None;
        }
        let num = log2_add(v.log2(), s.log2() + gamma) + shift;

        // product of |z - w|^2 kept as mantissa and binary exponent
        let mut m = 1.0f64;
        let mut e = 0i64;
        for (j, &w) in roots.iter().enumerate() {
            if j == k {
                continue;
            }
            let q = (z - w).norm_sqr();
            if !(q > SMALL * SMALL) {
                return None;
            }
            m *= q;
            if !(SMALL..=BIG).contains(&m) {
                let sh = m.log2().floor() as i64;
                m *= (-sh as f64).exp2();
                e += sh;
            }
        }
        let den = lead + 0.5 * (m.log2() + e as f64);
        let rad = (d as f64).log2() + num - den + slack;
        if !rad.is_finite() {
            return None;
        }
        out.push(rad);
    }
    Some(out)
}

/// Disks `a` and `b` (centers and `log2` radii) are disjoint.
fn apart(za: ExtComplex, ra: f64, zb: ExtComplex, rb: f64) -> bool {
    (za - zb).log2_abs() > log2_add(ra, rb)
}

/// Number of real zeros of `q` (`q(0) != 0`, degree at least one) certified
/// from an Aberth solve, or `None` when the inclusion disks do not settle it
/// (clustered or multiple zeros, or too little accuracy).
pub(crate) fn certified_real_count(q: &RealPoly) -> Option<usize> {
    let p = Polynomial::from_real(q.coeffs()).ok()?;
    let set = solve_roots(&p, 1e-14, DEFAULT_MAX_ITER).ok()?;
    let roots = &set.roots;
    let fast: Vec<Complex64> = roots.iter().map(|z| z.to_complex64()).collect();
    let radii = match log2_radii_f64(q.coeffs(), &fast) {
        Some(r) => r,
        None => {
            let coeffs: Vec<ExtComplex> = q.coeffs().iter().map(|&c| ExtComplex::from_real(c)).collect();
            log2_radii(&coeffs, roots)?
        }
    };

    let mut count = 0;
    for (k, &z) in roots.iter().enumerate() {
        // |Im z| = |z - conj z| / 2
        let im = (z - z.conj()).log2_abs() - 1.0;
        if im > radii[k] {
            continue;
        }
        let mirror = z.conj();
        for (j, &w) in roots.iter().enumerate() {
            if j != k && !(apart(z, radii[k], w, radii[j]) && apart(mirror, radii[k], w, radii[j])) {
                return None;
            }
        }
        count += 1;
    }
    Some(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certifies_simple_cases() {
        let p = RealPoly::new(vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(certified_real_count(&p), Some(3));
        assert_eq!(certified_real_count(&RealPoly::new(vec![1.0, 0.0, 1.0])), Some(0));
        // z^51 - 1 has the single real zero 1
        let mut c = vec![0.0; 52];
        c[0] = -1.0;
        c[51] = 1.0;
        assert_eq!(certified_real_count(&RealPoly::new(c)), Some(1));
    }

    #[test]
    fn both_radius_paths_agree() {
        let c = [0.7, -1.3, 0.2, 2.5, -0.4, 1.1, -0.9, 0.3];
        let p = Polynomial::from_real(&c).unwrap();
        let set = solve_roots(&p, 1e-14, DEFAULT_MAX_ITER).unwrap();
        let ext: Vec<ExtComplex> = c.iter().map(|&x| ExtComplex::from_real(x)).collect();
        let slow = log2_radii(&ext, &set.roots).unwrap();
        let fast = log2_radii_f64(&c, &set.complex_roots()).unwrap();
        for (a, b) in slow.iter().zip(&fast) {
            assert!((a - b).abs() < 0.1, "{a} vs {b}");
        }
    }

    #[test]
    fn double_root_is_not_certified() {
        // (x - 1)^2 (x + 2)
        assert_eq!(certified_real_count(&RealPoly::new(vec![2.0, -3.0, 0.0, 1.0])), None);
    }
}
