//! Fixtures shared by the benchmarks.

use polyzero_core::polygen::{sample_coefficients, CoeffDistribution, SeedPath};
use polyzero_core::{Polynomial, RealPoly};

/// Degree-`n` polynomial with i.i.d. coefficients from the named law.
pub fn random_polynomial(law: &str, n: usize, trial: u64) -> Polynomial {
    let d = CoeffDistribution::new(law, &[]).expect("registered law");
    sample_coefficients(&d, n, SeedPath::new(1234, trial))
        .and_then(|c| c.to_polynomial())
        .expect("valid sample")
}

/// Degree-`n` real Gaussian polynomial.
pub fn random_real_polynomial(n: usize, trial: u64) -> RealPoly {
    let d = CoeffDistribution::new("gaussian", &[]).expect("registered law");
    let c = sample_coefficients(&d, n, SeedPath::new(1234, trial)).expect("valid sample");
    RealPoly::new(c.real_parts())
}
