//! Closed-sphere spectra of `(−Δ)^l` in closed form.
//!
//! On the unit sphere `S^n` the Laplacian eigenvalues are `m(m+n−1)` for
//! `m = 0, 1, 2, …` with the spherical-harmonic multiplicities, so `(−Δ)^l`
//! has eigenvalues `(m(m+n−1))^l` with the same multiplicities. The boundary
//! is empty; `λ_1 = 0` belongs to the constants.

use crate::spectrum::{Domain, ProblemKind, ProblemSpec, Spectrum, SpectrumSource};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Dimension of the degree-`m` spherical harmonics on `S^n`:
/// 1 for `m = 0`, otherwise `C(n+m, n) − C(n+m−2, n)`.
pub fn harmonic_multiplicity(n: u32, m: u32) -> usize {
    if m == 0 {
        return 1;
    }
    let (n, m) = (n as u64, m as u64);
    (binomial(n + m, n) - binomial(n + m - 2, n)) as usize
}

/// First `count` eigenvalues of `(−Δ)^l` on the closed `S^n`, multiplicity
/// expanded and ascending.
pub fn sphere_closed_spectrum(n: u32, l: u32, count: usize) -> Spectrum {
    assert!(n >= 1 && l >= 1 && count >= 1);
    let mut values = Vec::with_capacity(count);
    let mut level = 0u32;
    while values.len() < count {
        let base = (level as u64 * (level as u64 + n as u64 - 1)) as f64;
        let value = base.powi(l as i32);
        for _ in 0..harmonic_multiplicity(n, level) {
            if values.len() == count {
                break;
            }
            values.push(value);
        }
        level += 1;
    }
    let source = SpectrumSource::Analytic;
    Spectrum::new(
        ProblemSpec::new(ProblemKind::DirichletPolyharmonic, l, n, Domain::ClosedSphere),
        values,
        source,
        source.default_tolerance(),
    )
}
