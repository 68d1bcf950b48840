//! Dense generalized symmetric eigensolver.
//!
//! `A v = λ B v` with `B` symmetric positive definite is reduced to a
//! standard symmetric problem through the Cholesky factor `B = L Lᵀ`:
//! `C = L⁻¹ A L⁻ᵀ`, eigenpairs `(λ, y)` of `C`, eigenvectors `v = L⁻ᵀ y`.
//! Matrix sizes stay in the hundreds, so a dense solve is appropriate.

use nalgebra::{DMatrix, SymmetricEigen};

use super::SolverError;

/// Ascending eigenpairs with per-pair backward-error estimates.
#[derive(Debug, Clone)]
pub struct EigResult {
    pub values: Vec<f64>,
    /// Column `j` is the eigenvector of `values[j]`, `B`-normalized.
    pub vectors: DMatrix<f64>,
    /// `‖A v − λ B v‖ / (‖A‖ + |λ| ‖B‖)` per retained pair.
    pub residual_norms: Vec<f64>,
}

impl EigResult {
    /// Indices of pairs whose backward error exceeds `tol`.
    pub fn flagged(&self, tol: f64) -> Vec<usize> {
        self.residual_norms
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > tol)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Row-oriented Cholesky that reports the first failing pivot.
fn cholesky_lower(b: &DMatrix<f64>) -> Result<DMatrix<f64>, usize> {
    let n = b.nrows();
    let mut l = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = b[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) {
            return Err(j);
        }
        let dj = d.sqrt();
        l[(j, j)] = dj;
        for i in (j + 1)..n {
            let mut s = b[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / dj;
        }
    }
    Ok(l)
}

/// Smallest `count` generalized eigenpairs of `A v = λ B v`.
pub fn gen_sym_eig(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    count: usize,
) -> Result<EigResult, SolverError> {
    solve_pencil(a, b, count, false)
}

/// Largest `count` generalized eigenpairs of `A v = λ B v`, descending.
///
/// The spectrum drivers want the smallest eigenvalues of badly spread
/// pencils; they invert the pencil and call this instead, because the
/// reduced matrix carries absolute noise `ε·‖C‖` and the inversion parks the
/// wanted eigenvalues at the dominant end where that noise is relatively
/// harmless.
pub(crate) fn gen_sym_eig_largest(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    count: usize,
) -> Result<EigResult, SolverError> {
    solve_pencil(a, b, count, true)
}

fn solve_pencil(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
    count: usize,
    largest: bool,
) -> Result<EigResult, SolverError> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n || b.ncols() != n {
        return Err(SolverError::BadArgument(format!(
            "pencil matrices must be square and matching, got {}x{} and {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    if count == 0 || count > n {
        return Err(SolverError::BadArgument(format!(
            "count = {count} out of range 1..={n}"
        )));
    }

    let l = cholesky_lower(b).map_err(|pivot| SolverError::NotPositiveDefinite { pivot })?;

    // C = L⁻¹ A L⁻ᵀ, symmetrized to wash out the two triangular solves.
    let x = l
        .solve_lower_triangular(a)
        .expect("Cholesky factor has positive diagonal");
    let y = l
        .solve_lower_triangular(&x.transpose())
        .expect("Cholesky factor has positive diagonal");
    let c = (&y + y.transpose()) * 0.5;

    let max_iter = 60 * n + 2000;
    let eigen = SymmetricEigen::try_new(c, f64::EPSILON, max_iter).ok_or(
        SolverError::NoConvergence {
            size: n,
            iterations: max_iter,
        },
    )?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eigen.eigenvalues[i].total_cmp(&eigen.eigenvalues[j]));
    if largest {
        order.reverse();
    }

    let lt = l.transpose();
    let norm_a = a.norm();
    let norm_b = b.norm();
    let mut values = Vec::with_capacity(count);
    let mut vectors = DMatrix::zeros(n, count);
    let mut residual_norms = Vec::with_capacity(count);
    for (slot, &idx) in order.iter().take(count).enumerate() {
        let lambda = eigen.eigenvalues[idx];
        let y_col = eigen.eigenvectors.column(idx).into_owned();
        let mut v = lt
            .solve_upper_triangular(&y_col)
            .expect("Cholesky factor has positive diagonal");
        // B-normalize (the reduced vectors are already near-orthonormal).
        let bnorm = v.dot(&(b * &v)).sqrt();
        v /= bnorm;
        let resid = (a * &v - b * &v * lambda).norm() / (norm_a + lambda.abs() * norm_b);
        values.push(lambda);
        vectors.set_column(slot, &v);
        residual_norms.push(resid);
    }

    Ok(EigResult {
        values,
        vectors,
        residual_norms,
    })
}
