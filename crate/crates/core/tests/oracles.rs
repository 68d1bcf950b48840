//! Regression of the Galerkin and Bessel solvers against independent
//! oracles: transcendental characteristic equations solved by bisection in
//! this file, closed forms, and self-convergence.

use approx::assert_relative_eq;
use std::f64::consts::PI;

use polybound::bounds::{ppw_gap_bound, yang_weak_bound};
use polybound::lemmas::moment_check;
use polybound::solver::{
    disk_clamped_plate_spectrum, eigenfunction_moments, interval_buckling_solve,
    interval_buckling_spectrum, interval_polyharmonic_solve, interval_polyharmonic_spectrum,
    rectangle_spectrum,
};

/// Bisection root finder for a sign change of `f` on `[lo, hi]`.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) < 0.0, "no sign change on the starting bracket");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if (f_lo < 0.0) == (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn membrane_matches_sine_spectrum_to_1e10() {
    let s = interval_polyharmonic_spectrum(1, 30, 5).unwrap();
    for (i, &v) in s.values.iter().enumerate() {
        assert_relative_eq!(v, (((i + 1) as f64) * PI).powi(2), max_relative = 1e-10);
    }
}

#[test]
fn beam_matches_characteristic_equation_roots() {
    // Clamped-clamped beam frequencies: cos μ cosh μ = 1, λ = μ⁴.
    let f = |mu: f64| mu.cos() * mu.cosh() - 1.0;
    let mu1 = bisect(f, 4.0, 5.5);
    let mu2 = bisect(f, 7.0, 8.5);
    assert_relative_eq!(mu1, 4.730040744862704, max_relative = 1e-12);
    assert_relative_eq!(mu2, 7.853204624095838, max_relative = 1e-12);

    let s = interval_polyharmonic_spectrum(2, 30, 2).unwrap();
    assert_relative_eq!(s.values[0], mu1.powi(4), max_relative = 1e-8);
    assert_relative_eq!(s.values[1], mu2.powi(4), max_relative = 1e-8);
    // Frozen decimal pins for quick diffing.
    assert_relative_eq!(s.values[0], 500.5639017404, max_relative = 1e-10);
    assert_relative_eq!(s.values[1], 3803.5370804979, max_relative = 1e-10);
}

#[test]
fn buckling_matches_its_two_mode_families() {
    // Symmetric modes 1 − cos(2πm x): Λ = 4π²m²; antisymmetric modes solve
    // tan(μ/2) = μ/2, written pole-free as sin(μ/2) − (μ/2)cos(μ/2).
    let s = interval_buckling_spectrum(2, 30, 4).unwrap();
    assert_relative_eq!(s.values[0], 4.0 * PI * PI, max_relative = 1e-10);
    let g = |mu: f64| (mu / 2.0).sin() - (mu / 2.0) * (mu / 2.0).cos();
    let mu2 = bisect(g, 7.0, 9.4);
    assert_relative_eq!(s.values[1], mu2 * mu2, max_relative = 1e-9);
    assert_relative_eq!(s.values[1], 80.7629142257, max_relative = 1e-9);
    assert_relative_eq!(s.values[2], 16.0 * PI * PI, max_relative = 1e-9);
    assert_relative_eq!(s.values[3], 238.7180637843, max_relative = 1e-8);
}

#[test]
fn order_three_interval_passes_its_own_sweep_at_50() {
    // The constructor compares N = 50 against N = 60 internally at 1e−9
    // relative, which subsumes the 1e−8 self-convergence requirement.
    let s = interval_polyharmonic_spectrum(3, 50, 1).unwrap();
    assert_relative_eq!(s.values[0], 61528.9083888, max_relative = 1e-9);
}

#[test]
fn disk_plate_frozen_values_and_multiplicities() {
    let s = disk_clamped_plate_spectrum(8, 6).unwrap();
    let expected = [
        104.36310556,  // m = 0
        452.00451013,  // m = 1 (double)
        452.00451013,
        1216.40759971, // m = 2 (double)
        1216.40759971,
        1581.74423205, // m = 0, second root
        2604.06452148, // m = 3 (double)
        2604.06452148,
    ];
    for (v, e) in s.values.iter().zip(expected) {
        assert_relative_eq!(*v, e, max_relative = 1e-8);
    }
    assert_eq!(s.values[1], s.values[2]);
    assert_eq!(s.values[3], s.values[4]);

    // Order-two gap bound at k = 1 is 9·λ_1 ≈ 939.3 and covers λ_2 ≈ 452.
    let bound = ppw_gap_bound(&s, 1).unwrap();
    assert_relative_eq!(bound, 9.0 * s.values[0], max_relative = 1e-13);
    assert!(s.values[1] <= bound);
}

#[test]
fn beam_quadratic_bound_is_25_lambda1() {
    // n = 1, l = 2 gives coupling c = 24, so the k = 1 quadratic bound
    // degenerates to 25·λ_1 ≈ 12514, safely above λ_2 ≈ 3803.5.
    let s = interval_polyharmonic_spectrum(2, 30, 2).unwrap();
    let (residual, bound) = yang_weak_bound(&s, 1).unwrap();
    assert!(residual <= 0.0);
    assert_relative_eq!(bound, 25.0 * s.values[0], max_relative = 1e-12);
    assert!(s.values[1] <= bound);
}

#[test]
fn square_plate_ground_state_regression() {
    // Frozen from an independent exact-integration run, stable to ~1e−10
    // between per-axis sizes 24 and 28.
    let s = rectangle_spectrum(2, 1.0, 1.0, 20, 4).unwrap();
    assert_relative_eq!(s.values[0], 1294.9339796, max_relative = 1e-8);
    assert_relative_eq!(s.values[1], 5386.6565610, max_relative = 1e-8);
    assert_relative_eq!(s.values[2], 5386.6565610, max_relative = 1e-8);
    // Degenerate pair agrees far beyond the spectrum tolerance.
    assert_relative_eq!(s.values[1], s.values[2], max_relative = 1e-10);
}

#[test]
fn beam_ground_state_moments_satisfy_the_moment_inequalities() {
    let solve = interval_polyharmonic_solve(2, 24, 2).unwrap();
    let ms = eigenfunction_moments(&solve.eig, &solve.grams, 0, 2);
    assert_relative_eq!(ms.mu[0], 1.0, max_relative = 1e-12);
    assert_relative_eq!(ms.mu[2], ms.lambda, max_relative = 1e-10);
    // μ_1 = ∫(u')² must sit below λ^{1/2} ≈ 22.37.
    assert!(ms.mu[1] <= ms.lambda.sqrt() * (1.0 + 1e-10));
    assert!(moment_check(&ms, 2, 1e-10).unwrap().is_empty());
}

#[test]
fn buckling_eigenfunction_moments_are_clean_too() {
    let solve = interval_buckling_solve(2, 24, 2).unwrap();
    for idx in 0..2 {
        let ms = eigenfunction_moments(&solve.eig, &solve.grams, idx, 2);
        assert_relative_eq!(ms.mu[0], 1.0, max_relative = 1e-12);
        // For the buckling pencil μ_2/μ_1 = Λ (Rayleigh quotient identity).
        assert_relative_eq!(
            ms.mu[2] / ms.mu[1],
            solve.eig.values[idx],
            max_relative = 1e-9
        );
    }
}
