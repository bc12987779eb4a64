use num_complex::Complex64;
use proptest::prelude::*;

use polyzero_core::rootsolve::{
    newton_power_sums, smallest_root_lower_bound, solve_roots, vieta_modulus_product, DEFAULT_MAX_ITER,
    DEFAULT_TOL,
};
use polyzero_core::{ExtComplex, Polynomial, RootSet};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Ascending coefficients of `prod (z - r)`.
fn from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![c(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![c(0.0, 0.0); p.len() + 1];
        for (k, &a) in p.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        p = next;
    }
    p
}

fn solve(coeffs: &[Complex64]) -> RootSet {
    let rs = solve_roots(&Polynomial::new(coeffs).unwrap(), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    assert!(rs.converged);
    rs
}

/// Largest distance from an expected root to its greedy match.
fn match_error(expected: &[Complex64], got: &[Complex64]) -> f64 {
    assert_eq!(expected.len(), got.len());
    let mut left: Vec<Complex64> = got.to_vec();
    let mut worst: f64 = 0.0;
    for e in expected {
        let (i, d) = left
            .iter()
            .enumerate()
            .map(|(i, g)| (i, (g - e).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        worst = worst.max(d);
        left.swap_remove(i);
    }
    worst
}

#[test]
fn recovers_prescribed_roots() {
    let roots = [
        c(0.5, 0.0),
        c(-1.2, 0.3),
        c(-1.2, -0.3),
        c(0.1, 1.7),
        c(2.0, -0.5),
        c(-0.3, -0.9),
        c(0.9, 0.9),
        c(-2.5, 0.0),
    ];
    let rs = solve(&from_roots(&roots));
    assert!(match_error(&roots, &rs.complex_roots()) < 1e-10);
}

#[test]
fn recovers_roots_of_unity_times_radius() {
    for n in [3usize, 17, 64, 200] {
        for r in [0.25f64, 1.0, 3.0] {
            let mut coeffs = vec![c(0.0, 0.0); n + 1];
            coeffs[0] = c(-r.powi(n as i32), 0.0);
            coeffs[n] = c(1.0, 0.0);
            let rs = solve(&coeffs);
            let expected: Vec<Complex64> =
                (0..n).map(|k| Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / n as f64)).collect();
            assert!(match_error(&expected, &rs.complex_roots()) < 1e-9 * r, "n={n} r={r}");
        }
    }
}

#[test]
fn roots_come_sorted_by_modulus_then_argument() {
    let rs = solve(&from_roots(&[c(2.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(1.0, 0.0), c(0.0, -2.0)]));
    assert!(rs.roots.windows(2).all(|w| w[0].cmp_modulus_arg(&w[1]).is_le()));
    let z = rs.complex_roots();
    assert!(z[..3].iter().all(|r| (r.norm() - 1.0).abs() < 1e-12));
    assert!(z[3..].iter().all(|r| (r.norm() - 2.0).abs() < 1e-12));
}

#[test]
fn trailing_and_leading_zeros_are_trimmed() {
    // z^2 (z - 3) with a zero leading coefficient appended
    let coeffs = [c(0.0, 0.0), c(0.0, 0.0), c(-3.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
    let p = Polynomial::new(&coeffs).unwrap();
    assert_eq!(p.effective_top(), 3);
    assert_eq!(p.origin_order(), 2);
    let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    let z = rs.complex_roots();
    assert_eq!(z.len(), 3);
    assert_eq!(z[0], c(0.0, 0.0));
    assert_eq!(z[1], c(0.0, 0.0));
    assert!((z[2] - c(3.0, 0.0)).norm() < 1e-12);
}

#[test]
fn rejects_degenerate_input() {
    assert!(Polynomial::new(&[c(0.0, 0.0), c(0.0, 0.0)]).is_err());
    assert!(Polynomial::new(&[c(f64::NAN, 0.0), c(1.0, 0.0)]).is_err());
    let constant = Polynomial::new(&[c(2.0, 0.0)]).unwrap();
    assert!(solve_roots(&constant, DEFAULT_TOL, DEFAULT_MAX_ITER).is_err());
    let p = Polynomial::new(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
    assert!(solve_roots(&p, 0.0, DEFAULT_MAX_ITER).is_err());
}

#[test]
fn extreme_coefficient_range_uses_extended_path() {
    // 1e200 + 1e-200 z^2 has zeros +-1e200 i
    let rs = solve(&[c(1e200, 0.0), c(0.0, 0.0), c(1e-200, 0.0)]);
    assert!(rs.extended);
    for z in rs.complex_roots() {
        assert!(z.re.abs() < 1e186 && (z.im.abs() / 1e200 - 1.0).abs() < 1e-12, "{z}");
    }
    // a zero far below f64 range: 1 + 1e300 z * 1e300
    let p = Polynomial::from_ext(vec![ExtComplex::from_real(1.0), ExtComplex::from_polar_log2(2000.0, 0.0)]).unwrap();
    let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    assert!((rs.roots[0].log2_abs() + 2000.0).abs() < 1e-9);
}

#[test]
fn lower_bound_holds_on_spread_polynomials() {
    for scale in [-8i32, -3, 0, 3, 8] {
        let coeffs: Vec<Complex64> = (0..30)
            .map(|k| c(((k * 7 % 11) as f64 - 5.0) * 10f64.powi(scale * (k % 3)), (k % 4) as f64 - 1.5))
            .collect();
        let p = Polynomial::new(&coeffs).unwrap();
        let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let min = rs.complex_roots().iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        assert!(min >= smallest_root_lower_bound(&p).unwrap() * (1.0 - 1e-12), "scale {scale}");
    }
}

fn coeff_strategy() -> impl Strategy<Value = Vec<Complex64>> {
    (1usize..=40).prop_flat_map(|d| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d + 1).prop_map(|v| {
            v.into_iter()
                .map(|(re, im)| {
                    // keep every coefficient away from zero
                    let z = c(re, im);
                    if z.norm() < 0.05 { c(0.5, 0.5) } else { z }
                })
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn newton_sums_match_roots(coeffs in coeff_strategy()) {
        let p = Polynomial::new(&coeffs).unwrap();
        let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        prop_assert!(rs.converged);
        let z = rs.complex_roots();
        let top = p.effective_top().min(5);
        let sums = newton_power_sums(&p, top).unwrap();
        for (l, s) in sums.iter().enumerate() {
            let direct: Complex64 = z.iter().map(|r| r.powi(-(l as i32 + 1))).sum();
            let scale = z.iter().map(|r| r.norm().powi(-(l as i32 + 1))).sum::<f64>();
            prop_assert!((direct - s).norm() <= 1e-6 * scale, "l={} {} vs {}", l + 1, direct, s);
        }
    }

    #[test]
    fn vieta_product_matches_roots(coeffs in coeff_strategy()) {
        let p = Polynomial::new(&coeffs).unwrap();
        let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let prod: f64 = rs.complex_roots().iter().map(|z| z.norm().ln()).sum::<f64>().exp();
        let v = vieta_modulus_product(&p).unwrap();
        prop_assert!((prod / v - 1.0).abs() <= 1e-6, "{} vs {}", prod, v);
    }

    #[test]
    fn residuals_respect_tolerance(coeffs in coeff_strategy()) {
        let p = Polynomial::new(&coeffs).unwrap();
        let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        prop_assert_eq!(rs.len(), p.degree());
        for (z, r) in rs.roots.iter().zip(&rs.residuals) {
            prop_assert!(*r <= DEFAULT_TOL);
            prop_assert!((p.relative_residual(*z) - r).abs() <= DEFAULT_TOL);
        }
    }

    #[test]
    fn no_zero_inside_lower_bound(coeffs in coeff_strategy()) {
        let p = Polynomial::new(&coeffs).unwrap();
        let rs = solve_roots(&p, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let min = rs.complex_roots().iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        // degree one puts the zero exactly on the bound
        prop_assert!(min >= smallest_root_lower_bound(&p).unwrap() * (1.0 - 1e-12));
    }
}

/// Eigenvalues of the companion matrix of a real monic-normalized polynomial.
fn companion_roots(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let m = nalgebra::DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / c[d]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().copied().collect()
}

#[test]
fn agrees_with_companion_eigenvalues() {
    use polyzero_core::polygen::{sample_coefficients, CoeffDistribution, SeedPath};
    let d = CoeffDistribution::new("gaussian", &[]).unwrap();
    for (t, n) in [8usize, 12, 20, 30].into_iter().enumerate() {
        let coeffs = sample_coefficients(&d, n, SeedPath::new(77, t as u64)).unwrap().real_parts();
        let rs = solve_roots(&Polynomial::from_real(&coeffs).unwrap(), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let err = match_error(&companion_roots(&coeffs), &rs.complex_roots());
        assert!(err < 1e-7, "n={n}: {err}");
    }
}
