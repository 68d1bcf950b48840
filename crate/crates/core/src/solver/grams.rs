//! Exact Gram matrices of the clamped polynomial basis.
//!
//! Basis function `j` on `[0, 1]` is `φ_j(x) = x^l (1−x)^l P_j(2x−1)` where
//! `P_j` is the degree-`j` Legendre polynomial. All coefficients are integers
//! (shifted Legendre polynomials have integer coefficients), every
//! derivative keeps integer coefficients, and `∫₀¹ x^q dx = 1/(q+1)`, so the
//! Gram entries are exact rationals. They are rounded to `f64` once, which
//! removes quadrature as an error source — assembling the same integrals in
//! floating point destroys the mass matrix's positive definiteness already
//! around thirty basis functions.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Dense symmetric derivative Gram matrices `G^{(r)}_{ij} = ∫₀¹ φ_i^{(r)} φ_j^{(r)}`
/// for `r = 0..=l`, plus the mixed matrix `C_{ij} = ∫₀¹ φ_i'' φ_j` feeding the
/// biharmonic cross term on rectangles.
#[derive(Debug, Clone)]
pub struct GramSet {
    pub basis_size: usize,
    /// Operator order `l` of the basis.
    pub order: u32,
    grams: Vec<DMatrix<f64>>,
    /// `C = −G^{(1)}` exactly (clamped boundary kills the boundary term).
    pub cross: DMatrix<f64>,
}

impl GramSet {
    /// `G^{(r)}`; panics if `r > l`.
    pub fn gram(&self, r: u32) -> &DMatrix<f64> {
        &self.grams[r as usize]
    }

    /// The Gram set of the leading `n` basis functions (entries do not depend
    /// on the basis size, so this is exact).
    pub fn leading(&self, n: usize) -> GramSet {
        assert!(n <= self.basis_size);
        GramSet {
            basis_size: n,
            order: self.order,
            grams: self
                .grams
                .iter()
                .map(|g| g.view((0, 0), (n, n)).into_owned())
                .collect(),
            cross: self.cross.view((0, 0), (n, n)).into_owned(),
        }
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k.min(n));
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Monomial coefficients of the shifted Legendre polynomial `P_j(2x−1)`:
/// coefficient of `x^k` is `(−1)^{j+k} C(j,k) C(j+k,k)`.
fn shifted_legendre(j: usize) -> Vec<BigInt> {
    (0..=j)
        .map(|k| {
            let mag = binomial(j as u64, k as u64) * binomial((j + k) as u64, k as u64);
            if (j + k).is_multiple_of(2) {
                mag
            } else {
                -mag
            }
        })
        .collect()
}

/// Monomial coefficients of the clamping bubble `x^l (1−x)^l`.
fn bubble(l: u32) -> Vec<BigInt> {
    let l = l as usize;
    let mut coeffs = vec![BigInt::zero(); 2 * l + 1];
    for j in 0..=l {
        let mag = binomial(l as u64, j as u64);
        coeffs[l + j] = if j % 2 == 0 { mag } else { -mag };
    }
    coeffs
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn derivative(a: &[BigInt]) -> Vec<BigInt> {
    if a.len() <= 1 {
        return vec![BigInt::zero()];
    }
    (1..a.len()).map(|m| &a[m] * BigInt::from(m)).collect()
}

/// Integrates products of integer polynomials over `[0, 1]` exactly.
///
/// With `L = lcm(1, …, maxdeg+1)`, the integral `Σ c_q/(q+1)` becomes
/// `(Σ c_q · L/(q+1)) / L`, one big division instead of one gcd per term.
struct ExactIntegrator {
    weights: Vec<BigInt>,
    denominator: BigInt,
}

impl ExactIntegrator {
    fn new(max_degree: usize) -> Self {
        let mut lcm = BigInt::one();
        for q in 1..=(max_degree as u64 + 1) {
            lcm = num_integer::lcm(lcm, BigInt::from(q));
        }
        let weights = (0..=max_degree)
            .map(|q| &lcm / BigInt::from(q as u64 + 1))
            .collect();
        ExactIntegrator {
            weights,
            denominator: lcm,
        }
    }

    /// `∫₀¹ a(x) b(x) dx` rounded once to `f64`.
    fn integrate_product(&self, a: &[BigInt], b: &[BigInt]) -> f64 {
        let conv = poly_mul(a, b);
        let mut num = BigInt::zero();
        for (q, c) in conv.iter().enumerate() {
            if !c.is_zero() {
                num += c * &self.weights[q];
            }
        }
        BigRational::new(num, self.denominator.clone())
            .to_f64()
            .expect("gram integral within f64 range")
    }
}

fn symmetric_gram(fns: &[Vec<BigInt>], integrator: &ExactIntegrator) -> DMatrix<f64> {
    let n = fns.len();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = integrator.integrate_product(&fns[i], &fns[j]);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    g
}

/// Builds all Gram matrices of the clamped basis with `n_basis` functions.
pub fn clamped_basis_grams(l: u32, n_basis: usize) -> GramSet {
    assert!(l >= 1 && n_basis >= 1);
    let bubble = bubble(l);
    let basis: Vec<Vec<BigInt>> = (0..n_basis)
        .map(|j| poly_mul(&bubble, &shifted_legendre(j)))
        .collect();
    let max_degree = 2 * (2 * l as usize + n_basis - 1) + 1;
    let integrator = ExactIntegrator::new(max_degree);

    let mut grams = Vec::with_capacity(l as usize + 1);
    let mut current: Vec<Vec<BigInt>> = basis.clone();
    for r in 0..=l {
        if r > 0 {
            current = current.iter().map(|f| derivative(f)).collect();
        }
        grams.push(symmetric_gram(&current, &integrator));
    }

    // C_{ij} = ∫ φ_i'' φ_j; symmetric because two integrations by parts give
    // C_{ij} = −∫ φ_i' φ_j' exactly (boundary terms vanish on the bubble).
    let second: Vec<Vec<BigInt>> = basis.iter().map(|f| derivative(&derivative(f))).collect();
    let n = n_basis;
    let mut cross = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = integrator.integrate_product(&second[i], &basis[j]);
            cross[(i, j)] = v;
            cross[(j, i)] = v;
        }
    }

    GramSet {
        basis_size: n_basis,
        order: l,
        grams,
        cross,
    }
}
