mod common;

use landau_wall::landau::{boundary_coeff, landau_level, Params};
use landau_wall::weyl::*;
use landau_wall::Error;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;

fn p(b: f64, a: f64) -> Params {
    Params::new(b, a, -1.0).unwrap()
}

/// Random energy strictly inside `(Λ_n, Λ_{n+1})`, away from the edges.
fn in_gap(rng: &mut impl Rng, b: f64, n: u32) -> f64 {
    landau_level(b, n) + 2.0 * b * rng.gen_range(1e-4..1.0 - 1e-4)
}

#[test]
fn monotone_and_herglotz_on_random_samples() {
    let s = WeylSettings::default();
    let mut rng = common::rng(7);
    for _ in 0..1000 {
        let a = [0.7, 1.1, 3.0][rng.gen_range(0..3)];
        let params = p(1.0, a);
        let m = rng.gen_range(0..=30);
        let n = rng.gen_range(0..=5);
        let (e1, e2) = {
            let (x, y) = (in_gap(&mut rng, 1.0, n), in_gap(&mut rng, 1.0, n));
            (x.min(y), x.max(y))
        };
        if e1 == e2 {
            continue;
        }
        let v1 = mu(&params, m, e1, &s).unwrap().value;
        let v2 = mu(&params, m, e2, &s).unwrap().value;
        assert!(v1 < v2, "a={a} m={m} n={n}: μ({e1})={v1} μ({e2})={v2}");
        let eta = 10f64.powf(rng.gen_range(-6.0..1.0));
        let z = mu_complex(&params, m, Complex64::new(e1, eta), &s).unwrap().value;
        assert!(z.im > 0.0, "Im μ({e1} + {eta}i) = {}", z.im);
    }
}

#[test]
fn herglotz_example() {
    let v = mu_complex(&p(1.0, 1.0), 0, Complex64::new(2.0, 0.1), &WeylSettings::default()).unwrap();
    assert!(v.value.im > 0.0);
}

#[test]
fn diverges_at_edges_with_nonzero_residue() {
    let s = WeylSettings::default();
    for &(b, a) in &[(1.0, 1.1), (2.0, 0.7), (0.5, 3.0)] {
        for m in [0, 3, 9] {
            for n in 0..4u32 {
                let params = p(b, a);
                if boundary_coeff(b, a, n, m).to_real() < 1e-2 * b {
                    continue;
                }
                assert!(mu_offset(&params, m, n, 1e-8 * b, &s).unwrap().value < -1e6);
                if n > 0 {
                    assert!(mu_offset(&params, m, n, -1e-8 * b, &s).unwrap().value > 1e6);
                }
            }
        }
    }
}

#[test]
fn below_lowest_level_positive_increasing_vanishing() {
    let s = WeylSettings::default();
    let params = p(1.0, 1.1);
    for m in 0..10 {
        let mut last = 0.0;
        for e in [-1e6, -1e3, -10.0, -1.0, 0.0, 0.5, 0.99] {
            let v = mu(&params, m, e, &s).unwrap().value;
            assert!(v > last);
            last = v;
        }
        assert!(mu(&params, m, -1e6, &s).unwrap().value < 1e-3);
    }
}

#[test]
fn pole_is_refused() {
    let s = WeylSettings::default();
    for e in [1.0, 3.0, 1.0 + 1e-13] {
        assert!(matches!(mu(&p(1.0, 1.1), 0, e, &s), Err(Error::Pole { .. })));
    }
    assert!(matches!(
        mu(&p(1.0, 1.1), 0, 2.0, &WeylSettings { term_tol: 1e-30, n_max_cap: 50, tail_safety: 8 }),
        Err(Error::NonConvergence { .. })
    ));
}

#[test]
fn derivative_matches_finite_difference() {
    let s = WeylSettings::default();
    let params = p(1.0, 1.0);
    let step = 1e-5;
    let fd = (mu(&params, 0, 2.0 + step, &s).unwrap().value - mu(&params, 0, 2.0 - step, &s).unwrap().value) / (2.0 * step);
    let d = mu_derivative(&params, 0, 2.0, &s).unwrap().value;
    assert!(((d - fd) / d).abs() < 1e-5);
    let near = mu_derivative(&params, 0, 1.0 + 1e-4, &s).unwrap().value;
    assert!(near >= 1e4 * d);
}

#[test]
fn remainder_identity_and_decay() {
    let s = WeylSettings::default();
    let params = p(1.0, 1.1);
    let mut rng = common::rng(5);
    for _ in 0..100 {
        let m = rng.gen_range(0..20);
        let n = rng.gen_range(0..4u32);
        let e = in_gap(&mut rng, 1.0, n);
        let full = mu(&params, m, e, &s).unwrap().value;
        let h = h_remainder(&params, m, n, e, &s).unwrap().value;
        let c = boundary_coeff(1.0, 1.1, n, m).to_real();
        let singular = c / (landau_level(1.0, n) - e);
        assert!((full - h - singular).abs() <= 1e-10 * full.abs().max(singular.abs()).max(1.0));
    }
    let mut prev = f64::INFINITY;
    for m in [0, 5, 12, 20, 40, 60] {
        let h = h_remainder(&params, m, 0, 1.0, &s).unwrap().value;
        assert!(h > 0.0 && h < prev);
        prev = h;
    }
}

#[test]
fn truncation_stability() {
    let s = WeylSettings::default();
    let fine = s.refined();
    let mut rng = common::rng(13);
    for _ in 0..200 {
        let a = [0.7, 1.1, 3.0][rng.gen_range(0..3)];
        let m = rng.gen_range(0..=30);
        let n = rng.gen_range(0..=5);
        let e = in_gap(&mut rng, 1.0, n);
        let v = mu(&p(1.0, a), m, e, &s).unwrap();
        let w = mu(&p(1.0, a), m, e, &fine).unwrap();
        assert!((v.value - w.value).abs() <= 1e-11 * v.value.abs().max(1.0), "{v:?} {w:?}");
        assert!(v.tail_bound <= 10.0 * s.term_tol * v.value.abs().max(1.0));
    }
}

#[test]
fn residue_examples() {
    let s = WeylSettings::default();
    let r = pole_residue(&p(1.0, 1.0), 0, 0, &s).unwrap();
    assert!((r.coefficient - (-0.5f64).exp()).abs() < 1e-15 && r.verified);
    let r = pole_residue(&p(1.0, 2f64.sqrt()), 0, 1, &s).unwrap();
    assert!(r.coefficient < 1e-30);
    let r = pole_residue(&p(1.0, 1.1), 2, 1, &s).unwrap();
    assert!(r.discrepancy <= 1e-8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mirror_modes_agree(m in 0i32..30, e in -5.0f64..11.0) {
        let params = p(1.0, 1.1);
        let s = WeylSettings::default();
        let lvl = ((e - 1.0) / 2.0).round();
        prop_assume!((e - (2.0 * lvl + 1.0)).abs() > 1e-6);
        prop_assert_eq!(mu(&params, m, e, &s).unwrap().value, mu(&params, -m, e, &s).unwrap().value);
    }

    #[test]
    fn derivative_positive(m in 0i32..20, n in 0u32..5, t in 0.001f64..0.999) {
        let e = 1.0 + 2.0 * f64::from(n) + 2.0 * t;
        prop_assert!(mu_derivative(&p(1.0, 1.1), m, e, &WeylSettings::default()).unwrap().value > 0.0);
    }
}
