//! Sturm chains in floating point.

use super::budan::{count_changes, sign};
use super::poly::{certified_sign, RealPoly};
use crate::error::{Error, Result};

/// `p_0 = p`, `p_1 = p'`, `p_{k+1} = -rem(p_{k-1}, p_k)` until the remainder
/// vanishes. Each member is rescaled by a positive factor (largest
/// coefficient magnitude one), which leaves every sign unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RealPoly>,
}

fn normalize(p: RealPoly) -> RealPoly {
    let m = p.coeffs().iter().map(|c| c.abs()).fold(0.0, f64::max);
    if m == 0.0 {
        return p;
    }
    RealPoly::new(p.coeffs().iter().map(|c| c / m).collect())
}

/// Remainder of `a / b`; coefficients at rounding level relative to the
/// dividend are flushed to zero.
fn remainder(a: &RealPoly, b: &RealPoly) -> RealPoly {
    let db = b.degree();
    let mut r = a.coeffs().to_vec();
    let lead = b.leading();
    let scale = a.coeffs().iter().map(|c| c.abs()).fold(0.0, f64::max);
    while r.len() > db {
        let top = r.len() - 1;
        let q = r[top] / lead;
        for (k, bk) in b.coeffs().iter().enumerate() {
            r[top - db + k] -= q * bk;
        }
        r.pop();
    }
    let tiny = 8.0 * (a.degree() + 1) as f64 * f64::EPSILON * scale;
    for c in &mut r {
        if c.abs() <= tiny {
            *c = 0.0;
        }
    }
    RealPoly::new(r)
}

impl SturmChain {
    pub fn new(p: &RealPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let mut chain = vec![normalize(p.clone()), normalize(p.derivative())];
        loop {
            let k = chain.len();
            if chain[k - 1].degree() == 0 {
                break;
            }
            let r = remainder(&chain[k - 2], &chain[k - 1]);
            if r.is_zero() {
                break;
            }
            let neg = RealPoly::new(r.coeffs().iter().map(|c| -c).collect());
            chain.push(normalize(neg));
        }
        Ok(SturmChain { chain })
    }

    pub fn members(&self) -> &[RealPoly] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Whether `p` has only simple zeros (the last member is constant).
    pub fn is_square_free(&self) -> bool {
        self.chain.last().is_some_and(|g| g.degree() == 0)
    }

    /// Plain sign variations at `x`.
    pub fn variations(&self, x: f64) -> usize {
        count_changes(self.chain.iter().map(|m| sign(m.eval(x))))
    }

    /// Sign variations at `x` with a sign-ambiguity guard: a member whose
    /// value is below its rounding bound is re-evaluated at `x +- h`,
    /// `h = 1e-9 (1 + |x|)`, on the side of `toward`, and counted as an
    /// escalation. Variations are constant between zeros of `p`, so the
    /// shift is harmless unless `p` has a zero within `h` of `x`.
    pub fn guarded_variations(&self, x: f64, toward: f64) -> (usize, usize) {
        let mut escalations = 0;
        let h = 1e-9 * (1.0 + x.abs()) * toward.signum();
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|m| {
                certified_sign(m.coeffs(), x).unwrap_or_else(|| {
                    escalations += 1;
                    let y = x + h;
                    certified_sign(m.coeffs(), y).unwrap_or_else(|| sign(m.eval(y)))
                })
            })
            .collect();
        (count_changes(signs.into_iter()), escalations)
    }
}

/// Outcome of a floating-point Sturm count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SturmCount {
    pub count: usize,
    /// Number of chain evaluations whose sign needed a perturbed point.
    pub escalations: usize,
}

/// Distinct real zeros of `p` in `(a, b]`, in floating point with the
/// sign-ambiguity guard.
pub fn sturm_count(p: &RealPoly, a: f64, b: f64) -> Result<SturmCount> {
    if !(a < b) {
        return Err(Error::InvalidInterval { lo: a, hi: b });
    }
    for x in [a, b] {
        if p.eval(x) == 0.0 {
            return Err(Error::EndpointRoot(x));
        }
    }
    let chain = SturmChain::new(p)?;
    let (va, ea) = chain.guarded_variations(a, 1.0);
    let (vb, eb) = chain.guarded_variations(b, -1.0);
    Ok(SturmCount {
        count: va.saturating_sub(vb),
        escalations: ea + eb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_simple_quadratics() {
        let p = RealPoly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(sturm_count(&p, -2.0, 2.0).unwrap().count, 2);
        let r = RealPoly::new(vec![1.0, 0.0, 1.0]);
        assert_eq!(sturm_count(&r, -2.0, 2.0).unwrap().count, 0);
    }

    #[test]
    fn cubic_with_three_integer_roots() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let p = RealPoly::new(vec![-6.0, 11.0, -6.0, 1.0]);
        assert_eq!(sturm_count(&p, 0.5, 2.5).unwrap().count, 2);
        assert_eq!(sturm_count(&p, 1.0, 2.5).unwrap_err(), Error::EndpointRoot(1.0));
        assert_eq!(sturm_count(&p, 2.5, 0.5).unwrap_err(), Error::InvalidInterval { lo: 2.5, hi: 0.5 });
    }

    #[test]
    fn repeated_roots_count_once() {
        // (x-1)^2 (x+2)
        let p = RealPoly::new(vec![2.0, -3.0, 0.0, 1.0]);
        let chain = SturmChain::new(&p).unwrap();
        assert!(!chain.is_square_free());
        assert_eq!(sturm_count(&p, -5.0, 5.0).unwrap().count, 2);
    }

    #[test]
    fn chain_degrees_strictly_decrease() {
        let c = [0.3, -1.7, 2.2, 0.9, -0.4, 1.1, -0.6];
        let chain = SturmChain::new(&RealPoly::new(c.to_vec())).unwrap();
        for w in chain.members().windows(2) {
            assert!(w[1].degree() < w[0].degree());
        }
        assert!(chain.is_square_free());
    }

    #[test]
    fn constant_rejected() {
        assert_eq!(
            sturm_count(&RealPoly::new(vec![2.0]), 0.0, 1.0).unwrap_err(),
            Error::ConstantPolynomial
        );
    }
}
