use proptest::prelude::*;

use polyzero_core::polygen::{sample_coefficients, CoeffDistribution, SeedPath};
use polyzero_core::realroots::{
    budan_fourier_bound, budan_fourier_bound_exact, count_real_roots, count_real_roots_exact, sturm_count,
    sturm_count_exact, z_p, z_p_exact, CountMethod,
};
use polyzero_core::RealPoly;

fn mul(p: &[f64], q: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Exact product of `(x - r)` over `real` and `(x - a)^2 + b^2` over `pairs`;
/// all entries are quarter-integers so every coefficient is exact.
fn build(real: &[i32], pairs: &[(i32, i32)]) -> RealPoly {
    let mut p = vec![1.0];
    for &r in real {
        p = mul(&p, &[-(r as f64) / 4.0, 1.0]);
    }
    for &(a, b) in pairs {
        let (a, b) = (a as f64 / 4.0, b as f64 / 4.0);
        p = mul(&p, &[a * a + b * b, -2.0 * a, 1.0]);
    }
    RealPoly::new(p)
}

fn distinct(real: &[i32]) -> usize {
    let mut v = real.to_vec();
    v.sort();
    v.dedup();
    v.len()
}

fn factored() -> impl Strategy<Value = (Vec<i32>, Vec<(i32, i32)>)> {
    (
        prop::collection::vec(-12i32..=12, 0..8),
        prop::collection::vec((-8i32..=8, 1i32..=8), 0..4),
    )
        .prop_filter("nonconstant", |(r, p)| !r.is_empty() || !p.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn counts_match_factored_form((real, pairs) in factored()) {
        let p = build(&real, &pairs);
        prop_assert_eq!(count_real_roots_exact(&p).unwrap(), distinct(&real));
        prop_assert_eq!(count_real_roots(&p).unwrap().count, distinct(&real));
    }

    #[test]
    fn budan_bound_exceeds_count_by_even((real, pairs) in factored(), a in -14i32..14, w in 1i32..14) {
        // endpoints are odd multiples of 1/8, never a zero
        let (lo, hi) = ((2 * a + 1) as f64 / 8.0, (2 * (a + w) + 1) as f64 / 8.0);
        let p = build(&real, &pairs);
        let with_mult = real.iter().filter(|&&r| lo < r as f64 / 4.0 && (r as f64 / 4.0) < hi).count() as i64;
        let bound = budan_fourier_bound_exact(&p, lo, hi).unwrap();
        prop_assert!(bound >= with_mult);
        prop_assert_eq!((bound - with_mult) % 2, 0);
        prop_assert_eq!(budan_fourier_bound(&p, lo, hi).unwrap(), bound);

        let mut uniq = real.clone();
        uniq.sort();
        uniq.dedup();
        let in_range = uniq.iter().filter(|&&r| lo < r as f64 / 4.0 && (r as f64 / 4.0) < hi).count();
        prop_assert_eq!(sturm_count_exact(&p, lo, hi).unwrap(), in_range);
    }

    #[test]
    fn z_p_is_non_increasing((real, pairs) in factored(), xs in prop::collection::vec(-5.0f64..5.0, 2..10)) {
        let p = build(&real, &pairs);
        let mut xs = xs;
        xs.sort_by(f64::total_cmp);
        let zs: Vec<usize> = xs.iter().map(|&x| z_p_exact(&p, x)).collect();
        prop_assert!(zs.windows(2).all(|w| w[0] >= w[1]), "{:?}", zs);
        prop_assert!(zs.iter().all(|&z| z <= p.degree()));
    }

    #[test]
    fn z_p_spans_degree_over_the_root_bound((real, pairs) in factored()) {
        let p = build(&real, &pairs);
        let b = 1.0 + p.cauchy_bound().unwrap();
        prop_assert_eq!(z_p_exact(&p, -b), p.degree());
        prop_assert_eq!(z_p_exact(&p, b), 0);
        prop_assert_eq!(z_p(&p, b), 0);
    }

    #[test]
    fn reflection_and_reversal_preserve_counts(coeffs in prop::collection::vec(-3i32..=3, 2..25)) {
        let mut c: Vec<f64> = coeffs.iter().map(|&v| v as f64).collect();
        c[0] = if c[0] == 0.0 { 1.0 } else { c[0] };
        let last = c.len() - 1;
        c[last] = if c[last] == 0.0 { -2.0 } else { c[last] };
        let p = RealPoly::new(c);
        let m = count_real_roots_exact(&p).unwrap();
        prop_assert_eq!(count_real_roots_exact(&p.reflected()).unwrap(), m);
        prop_assert_eq!(count_real_roots_exact(&p.reversed()).unwrap(), m);
        prop_assert_eq!(count_real_roots(&p).unwrap().count, m);
    }
}

#[test]
fn multiple_roots_count_once_and_fall_back_to_exact() {
    // (x - 1)^3 (x + 0.5)^2 (x^2 + 1)
    let p = build(&[4, 4, 4, -2, -2], &[(0, 4)]);
    let c = count_real_roots(&p).unwrap();
    assert_eq!(c.count, 2);
    assert_eq!(c.method, CountMethod::Exact);
    assert!(c.escalated());
}

#[test]
fn origin_root_counts_once() {
    // x^3 (x - 2)(x + 3)
    let p = RealPoly::new(vec![0.0, 0.0, 0.0, -6.0, 1.0, 1.0]);
    assert_eq!(count_real_roots(&p).unwrap().count, 3);
    assert_eq!(count_real_roots_exact(&p).unwrap(), 3);
}

#[test]
fn float_and_exact_sturm_agree_on_well_separated_roots() {
    let p = build(&[-9, -4, -1, 3, 7, 11], &[(2, 3), (-5, 1)]);
    for (a, b) in [(-3.0, 3.0), (-1.1, 0.1), (0.3, 2.6), (1.9, 2.9)] {
        assert_eq!(sturm_count(&p, a, b).unwrap().count, sturm_count_exact(&p, a, b).unwrap(), "({a}, {b}]");
    }
}

#[test]
fn endpoint_roots_are_rejected() {
    let p = build(&[4, -8], &[]);
    assert!(sturm_count_exact(&p, 1.0, 3.0).is_err());
    assert!(budan_fourier_bound_exact(&p, -3.0, -2.0).is_err());
    assert!(sturm_count(&p, 3.0, 1.0).is_err());
}

/// Sign changes of `p` on a uniform grid: a lower bound on the number of
/// zeros in the range, equal to it once the grid separates them.
fn grid_count(p: &RealPoly, lo: f64, hi: f64, steps: usize) -> usize {
    let h = (hi - lo) / steps as f64;
    let mut prev = p.eval(lo).signum();
    let mut n = 0;
    for i in 1..=steps {
        let s = p.eval(lo + h * i as f64).signum();
        if s != prev {
            n += 1;
            prev = s;
        }
    }
    n
}

#[test]
fn rademacher_degree_100_against_grid_scan() {
    // zeros of a +-1 polynomial have modulus in (1/2, 2)
    let d = CoeffDistribution::new("rademacher", &[]).unwrap();
    for t in 0..10 {
        let c = sample_coefficients(&d, 100, SeedPath::new(21, t)).unwrap();
        let p = RealPoly::new(c.real_parts());
        let neg = grid_count(&p, -2.0, -0.5, 300_000);
        let pos = grid_count(&p, 0.5, 2.0, 300_000);
        let m = count_real_roots(&p).unwrap();
        assert_eq!(m.count, neg + pos, "trial {t}");
        assert_eq!(m.method, CountMethod::Certified);
    }
}

#[test]
fn certified_agrees_with_exact_on_gaussian_samples() {
    let d = CoeffDistribution::new("gaussian", &[]).unwrap();
    for t in 0..40 {
        let n = 5 + (t as usize * 7) % 60;
        let c = sample_coefficients(&d, n, SeedPath::new(33, t)).unwrap();
        let p = RealPoly::new(c.real_parts());
        let m = count_real_roots(&p).unwrap();
        assert_eq!(m.count, count_real_roots_exact(&p).unwrap(), "n={n}");
        assert_eq!(m.count, m.sturm, "n={n}");
    }
}
