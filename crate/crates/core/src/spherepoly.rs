//! Exact-rational polynomial arithmetic and the sphere-domain recursions.
//!
//! The polynomials `F_p(t)` are defined inductively by
//!
//! ```text
//! F_0 = 1,  F_1 = t − n,
//! F_p = (2t − 2) F_{p−1} − (t² + 2t − n(n−2)) F_{p−2},   p ≥ 2,
//! ```
//!
//! and the pair `B_q(t)`, `C_q(t)` by
//!
//! ```text
//! B_0 = 1,  B_1 = t − n,  C_0 = 0,  C_1 = 1,
//! B_q = (t − n) B_{q−1} − 4t C_{q−1},
//! C_q = B_{q−1} + (t + n − 2) C_{q−1}.
//! ```
//!
//! The two routes agree (`B_q = F_q` for all `q`), which the tests exploit as
//! a cross-check. Coefficient growth is fast and float drift would corrupt
//! the absolute coefficients consumed by the sphere bounds, so everything
//! here is exact; conversion to floating point happens only in
//! [`abs_lower_coeffs`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpherePolyError {
    #[error("polynomial must be monic of degree >= 1, got leading coefficient {leading}")]
    NonMonic { leading: String },
    #[error("polynomial must have degree >= 1")]
    DegreeZero,
}

/// Dense polynomial with exact rational coefficients; index = degree.
///
/// Canonical form: no trailing zero coefficients. The zero polynomial has an
/// empty coefficient list and degree `None` (the `−∞` sentinel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPoly { coeffs: vec![c] }.canonical()
    }

    /// `t` as a polynomial.
    pub fn t() -> Self {
        RationalPoly::from_integers(&[0, 1])
    }

    /// Builds from integer coefficients, lowest degree first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        RationalPoly {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
        .canonical()
    }

    fn canonical(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients lowest degree first (canonical form).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigRational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Coefficients rounded to `f64`, lowest degree first.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().expect("coefficient out of f64 range"))
            .collect()
    }
}

/// Exact ring addition; canonical form preserved.
pub fn poly_add(p: &RationalPoly, q: &RationalPoly) -> RationalPoly {
    let mut coeffs = vec![BigRational::zero(); p.coeffs.len().max(q.coeffs.len())];
    for (i, c) in p.coeffs.iter().enumerate() {
        coeffs[i] += c;
    }
    for (i, c) in q.coeffs.iter().enumerate() {
        coeffs[i] += c;
    }
    RationalPoly { coeffs }.canonical()
}

/// Exact ring multiplication; canonical form preserved.
pub fn poly_mul(p: &RationalPoly, q: &RationalPoly) -> RationalPoly {
    if p.is_zero() || q.is_zero() {
        return RationalPoly::zero();
    }
    let mut coeffs = vec![BigRational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    RationalPoly { coeffs }.canonical()
}

/// Exact scalar multiple; `poly_scale(p, 0)` is the canonical zero polynomial.
pub fn poly_scale(p: &RationalPoly, r: &BigRational) -> RationalPoly {
    RationalPoly {
        coeffs: p.coeffs.iter().map(|c| c * r).collect(),
    }
    .canonical()
}

impl std::ops::Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        poly_add(self, rhs)
    }
}

impl std::ops::Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        poly_mul(self, rhs)
    }
}

impl std::ops::Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        poly_add(self, &poly_scale(rhs, &-BigRational::one()))
    }
}

impl fmt::Display for RationalPoly {
    /// Coefficients highest degree first, space separated, exact fractions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The polynomial `F_p(t)` for dimension `n`; monic of degree `p` for `p ≥ 1`.
pub fn f_poly(n: u32, p: u32) -> RationalPoly {
    let n = i64::from(n);
    let mut prev = RationalPoly::one(); // F_0
    if p == 0 {
        return prev;
    }
    let mut cur = RationalPoly::from_integers(&[-n, 1]); // F_1 = t − n
    let first = RationalPoly::from_integers(&[-2, 2]); // 2t − 2
    let second = RationalPoly::from_integers(&[-n * (n - 2), 2, 1]); // t² + 2t − n(n−2)
    for _ in 2..=p {
        let next = &poly_mul(&first, &cur) - &poly_mul(&second, &prev);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur.degree(), Some(p as usize));
    debug_assert!(cur.is_monic());
    cur
}

/// The pair `(B_q, C_q)` for dimension `n`.
///
/// Only the top-order `B` feeds the sphere bounds; `C` is exposed so the
/// `B_q = F_q` equivalence can be property-tested through an independent
/// recursion route.
pub fn bc_polys(n: u32, q: u32) -> (RationalPoly, RationalPoly) {
    let n = i64::from(n);
    let mut b = RationalPoly::one(); // B_0
    let mut c = RationalPoly::zero(); // C_0
    if q == 0 {
        return (b, c);
    }
    let t_minus_n = RationalPoly::from_integers(&[-n, 1]);
    let four_t = RationalPoly::from_integers(&[0, 4]);
    let t_plus_n2 = RationalPoly::from_integers(&[n - 2, 1]);
    for _ in 1..=q {
        let b_next = &poly_mul(&t_minus_n, &b) - &poly_mul(&four_t, &c);
        let c_next = poly_add(&b, &poly_mul(&t_plus_n2, &c));
        b = b_next;
        c = c_next;
    }
    (b, c)
}

/// Absolute values `(|a_0|, …, |a_{l−1}|)` of the coefficients below the
/// leading term of a monic polynomial, converted to floating point.
pub fn abs_lower_coeffs(p: &RationalPoly) -> Result<Vec<f64>, SpherePolyError> {
    let degree = p.degree().filter(|&d| d >= 1).ok_or(SpherePolyError::DegreeZero)?;
    if !p.is_monic() {
        return Err(SpherePolyError::NonMonic {
            leading: p.coeff(degree).to_string(),
        });
    }
    Ok(p.coeffs[..degree]
        .iter()
        .map(|c| c.abs().to_f64().expect("coefficient out of f64 range"))
        .collect())
}

/// Absolute lower coefficients of `F_l` for a given `(n, l)`, tagged so that
/// sphere-bound evaluations can reject mismatched spectra.
///
/// Always built from the recursion; never entered by hand.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereCoefficients {
    pub n: u32,
    pub l: u32,
    /// `|a_0|, |a_1|, …, |a_{l−1}|`.
    pub abs_a: Vec<f64>,
}

impl SphereCoefficients {
    pub fn new(n: u32, l: u32) -> Self {
        assert!(n >= 1 && l >= 1, "require n >= 1 and l >= 1");
        let abs_a = abs_lower_coeffs(&f_poly(n, l)).expect("F_l is monic of degree l");
        SphereCoefficients { n, l, abs_a }
    }

    /// `P(λ) = |a_{l−1}| λ^{(l−1)/l} + … + |a_1| λ^{1/l} + |a_0|`.
    pub fn weight(&self, lambda: f64) -> f64 {
        let mut acc = 0.0;
        for (j, a) in self.abs_a.iter().enumerate() {
            acc += a * crate::bounds::lambda_pow(lambda, j as u32, self.l);
        }
        acc
    }
}
