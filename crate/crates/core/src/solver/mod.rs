//! Reference spectra for the eigenvalue inequalities.
//!
//! Analytic where closed forms exist (closed spheres), Galerkin for the
//! clamped interval/rectangle problems of any order, and Bessel cross-product
//! roots for the clamped disk plate.
//!
//! The Galerkin basis is `φ_j(x) = x^l (1−x)^l P_j(2x−1)` with `P_j` the
//! Legendre polynomials: the bubble factor imposes the clamped conditions of
//! order `l` exactly, every Gram integral is a rational number computed
//! exactly before a single rounding to `f64`, and convergence is spectral.

mod disk;
mod eig;
mod grams;
mod interval;
mod rectangle;
mod sphere;

pub use disk::disk_clamped_plate_spectrum;
pub use eig::{gen_sym_eig, EigResult};
pub use grams::{clamped_basis_grams, GramSet};
pub use interval::{
    interval_buckling_solve, interval_buckling_spectrum, interval_polyharmonic_solve,
    interval_polyharmonic_spectrum, IntervalSolve, SWEEP_RTOL, SWEEP_STEP,
};
pub use rectangle::rectangle_spectrum;
pub use sphere::{harmonic_multiplicity, sphere_closed_spectrum};

use thiserror::Error;

use crate::lemmas::MomentSequence;

#[derive(Debug, Error, PartialEq)]
pub enum SolverError {
    #[error("matrix is not positive definite: factorization failed at pivot {pivot}")]
    NotPositiveDefinite { pivot: usize },
    #[error("eigensolver did not converge for size {size} within {iterations} iterations")]
    NoConvergence { size: usize, iterations: usize },
    #[error(
        "convergence sweep failed at eigenvalue {index}: relative change {achieved:.3e} \
         between basis sizes {n_small} and {n_large} exceeds {required:.3e}"
    )]
    ConvergenceSweep {
        index: usize,
        achieved: f64,
        required: f64,
        n_small: usize,
        n_large: usize,
    },
    #[error(
        "angular cutoff m_max = {m_max} is too small: its first root {first_root} does not \
         clear the last retained root {last_retained}"
    )]
    RootExhaustion {
        m_max: u32,
        first_root: f64,
        last_retained: f64,
    },
    #[error("{0}")]
    BadArgument(String),
}

/// Moments `μ_k = vᵀ G^{(k)} v`, `k = 0..l`, of a Galerkin eigenfunction.
///
/// For the clamped polynomial basis the quadratic form `vᵀ G^{(k)} v` is the
/// exact value of `∫ u (−Δ)^k u`, so the moment inequalities must hold up to
/// eigensolver accuracy.
pub fn eigenfunction_moments(
    e: &EigResult,
    g: &GramSet,
    index: usize,
    l: u32,
) -> MomentSequence {
    let v = e.vectors.column(index);
    let mass_norm = (v.dot(&(g.gram(0) * v))).sqrt();
    let mut mu = Vec::with_capacity(l as usize + 1);
    for r in 0..=l {
        let quad = v.dot(&(g.gram(r) * v)) / (mass_norm * mass_norm);
        mu.push(quad);
    }
    MomentSequence {
        mu,
        lambda: e.values[index],
    }
}
