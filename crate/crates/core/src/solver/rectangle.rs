//! Clamped rectangle spectra by tensor-product Galerkin assembly.
//!
//! With the 1D clamped factors `φ_i(x/w) φ_j(y/h)` the quadratic forms
//! separate into Kronecker products of the 1D Gram matrices, scaled per axis
//! by `w^{1−2r}` for an order-`r` derivative factor:
//!
//! * membrane (`l = 1`): stiffness `(h/w) G¹⊗G⁰ + (w/h) G⁰⊗G¹`,
//! * plate (`l = 2`): `∫ Δu Δv` expands into
//!   `(h/w³) G²⊗G⁰ + (w/h³) G⁰⊗G² + (2/(wh)) C⊗C` with the mixed matrix
//!   `C = ∫ φ'' φ` (symmetric on the clamped basis),
//!
//! against the mass `wh · G⁰⊗G⁰`.

use crate::spectrum::{Domain, ProblemKind, ProblemSpec, Spectrum, SpectrumSource};

use super::eig::gen_sym_eig_largest;
use super::grams::clamped_basis_grams;
use super::SolverError;

/// Clamped membrane or plate spectrum on `[0, w] × [0, h]` with `n_basis`
/// functions per axis.
pub fn rectangle_spectrum(
    l: u32,
    width: f64,
    height: f64,
    n_basis: usize,
    count: usize,
) -> Result<Spectrum, SolverError> {
    if !(l == 1 || l == 2) {
        return Err(SolverError::BadArgument(format!(
            "rectangle solver supports l = 1 or 2, got {l}"
        )));
    }
    if !(width > 0.0 && height > 0.0) {
        return Err(SolverError::BadArgument(format!(
            "rectangle sides must be positive, got {width} x {height}"
        )));
    }
    let dim = n_basis * n_basis;
    if count == 0 || count > dim {
        return Err(SolverError::BadArgument(format!(
            "count = {count} out of range 1..={dim}"
        )));
    }

    let g = clamped_basis_grams(l, n_basis);
    let g0 = g.gram(0);
    let mass = g0.kronecker(g0) * (width * height);
    let stiffness = match l {
        1 => {
            let g1 = g.gram(1);
            g1.kronecker(g0) * (height / width) + g0.kronecker(g1) * (width / height)
        }
        2 => {
            let g2 = g.gram(2);
            g2.kronecker(g0) * (height / width.powi(3))
                + g0.kronecker(g2) * (width / height.powi(3))
                + g.cross.kronecker(&g.cross) * (2.0 / (width * height))
        }
        _ => unreachable!(),
    };

    // Inverted pencil, as in the interval driver: the wanted eigenvalues are
    // the dominant ones of M v = μ K v, at full relative precision.
    let eig = gen_sym_eig_largest(&mass, &stiffness, count)?;
    let values: Vec<f64> = eig.values.iter().map(|&mu| mu.recip()).collect();
    let source = SpectrumSource::Galerkin(n_basis);
    Ok(Spectrum::new(
        ProblemSpec::new(
            ProblemKind::DirichletPolyharmonic,
            l,
            2,
            Domain::Rectangle { width, height },
        ),
        values,
        source,
        source.default_tolerance(),
    ))
}
