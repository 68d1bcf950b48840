//! Universal eigenvalue inequalities as calculators and residual checkers.
//!
//! Conventions, shared by every rule:
//!
//! * `k` is 1-based and the rule at index `k` consumes `λ_1, …, λ_k` to
//!   constrain `λ_{k+1}`; the spectrum must contain `λ_{k+1}` so the claim
//!   can be checked.
//! * Residual checkers return `LHS − RHS` with nonpositive values meaning
//!   the inequality holds; calculators return an explicit upper bound for
//!   `λ_{k+1}`.
//! * Fractional eigenvalue powers `λ^{p/l}` extend continuously to `λ = 0`
//!   (so closed-sphere spectra with `λ_1 = 0` are admissible where the rule
//!   permits them).
//!
//! The rules and their identifiers:
//!
//! | id            | statement                                                             |
//! |---------------|-----------------------------------------------------------------------|
//! | `ppw`         | `λ_{k+1} ≤ λ_k + (4l(n+2l−2)/(n²k²)) (Σλ_i^{1/l})(Σλ_i^{(l−1)/l})`     |
//! | `hile-protter`| `Σ λ_i/(λ_{k+1}−λ_i) ≥ kn/4` (order `l = 1`)                           |
//! | `yang-weak`   | `Σ(λ_{k+1}−λ_i)² ≤ c Σ(λ_{k+1}−λ_i)λ_i`, `c = 4l(n+2l−2)/n²`           |
//! | `yang-strong` | `Σ(λ_{k+1}−λ_i)² ≤ √c (Σ(λ_{k+1}−λ_i)²λ_i^{(l−1)/l})^{1/2} (Σ(λ_{k+1}−λ_i)λ_i^{1/l})^{1/2}` |
//! | `cor3.1a`     | mean + coupling + root form of the quadratic solved for `λ_{k+1}`      |
//! | `cor3.1b`     | variance-penalized form with the same constant `c`                     |
//! | `thm4.1`      | low-order sum bound `Σ_{i=2}^{n+1} λ_i + …  ≤ (n + 4l(2l−1)) λ_1`      |
//! | `thm4.2`      | buckling: `Σ_{i=1}^n Λ_{i+1} + 4(Λ_2−Λ_1)/(n+4) ≤ (n+4) Λ_1`           |
//! | `thm4.3`      | `Σ_{m=1}^n (m/(2l+m))(Λ_{n+2−m}−Λ_1) < 4(l−1) Λ_1`, `l ≥ 2`            |
//! | `thm5.1`      | sphere-domain quadratic inequality with weight `P(λ)` from `F_l`       |
//! | `cor5.1a`     | sphere analogue of `cor3.1a`                                           |
//! | `cor5.1b`     | `λ_{k+1} ≤ U + sqrt(U² − V)` with the sphere moment sums `U`, `V`      |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::report::BoundReport;
use crate::spectrum::{Domain, ProblemKind, Spectrum};
use crate::spherepoly::SphereCoefficients;

/// `λ^{num/den}` with the continuous extension `0^{p/l} = 0` and the exact
/// reductions `λ^0 = 1`, `λ^{l/l} = λ` (so order-one specializations are
/// bit-consistent with their classical forms).
pub fn lambda_pow(lambda: f64, num: u32, den: u32) -> f64 {
    debug_assert!(den >= 1 && num <= den);
    if num == 0 {
        1.0
    } else if num == den {
        lambda
    } else if lambda == 0.0 {
        0.0
    } else {
        lambda.powf(num as f64 / den as f64)
    }
}

/// The coupling constant of the quadratic (Yang-type) inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YangConstants {
    /// `c = 4l(n+2l−2)/n²`; reduces to `4/n` at `l = 1`.
    pub c: f64,
    pub half_c: f64,
}

impl YangConstants {
    pub fn new(n: u32, l: u32) -> Self {
        let c = 4.0 * l as f64 * (n + 2 * l - 2) as f64 / (n as f64 * n as f64);
        YangConstants { c, half_c: c / 2.0 }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("index k = {k} out of range; need 1 <= k <= {max} so that lambda_(k+1) is known")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("rule `{rule}` requires problem kind {required}, got {got}")]
    KindMismatch {
        rule: &'static str,
        required: &'static str,
        got: &'static str,
    },
    #[error("rule `{rule}` requires domain {required}, got {got}")]
    DomainMismatch {
        rule: &'static str,
        required: &'static str,
        got: String,
    },
    #[error("rule `{rule}` requires lambda_1 > 0 (nonempty boundary)")]
    ZeroLambdaOne { rule: &'static str },
    #[error("gap collapse: lambda_(k+1) equals lambda_{index}, the sum is singular")]
    GapCollapse { index: usize },
    #[error("discriminant negative in rule `{rule}` (inconsistent input spectrum)")]
    NegativeDiscriminant { rule: &'static str },
    #[error("rule `{rule}` needs at least {needed} eigenvalues, spectrum has {got}")]
    TooFewEigenvalues {
        rule: &'static str,
        needed: usize,
        got: usize,
    },
    #[error("rule `{rule}` requires operator order l >= {minimum}, got {l}")]
    UnsupportedOrder {
        rule: &'static str,
        l: u32,
        minimum: u32,
    },
    #[error("rule `{rule}` applies to the Laplacian case only (l = 1), got l = {l}")]
    LaplacianOnly { rule: &'static str, l: u32 },
    #[error(
        "coefficients are for (n, l) = ({coeff_n}, {coeff_l}) but spectrum has ({spec_n}, {spec_l})"
    )]
    CoefficientMismatch {
        spec_n: u32,
        spec_l: u32,
        coeff_n: u32,
        coeff_l: u32,
    },
    #[error("rule `{rule}` needs an index; pass --k")]
    MissingIndex { rule: &'static str },
}

fn require_kind(
    rule: &'static str,
    s: &Spectrum,
    required: &'static [ProblemKind],
    label: &'static str,
) -> Result<(), BoundError> {
    if required.contains(&s.spec.kind) {
        Ok(())
    } else {
        Err(BoundError::KindMismatch {
            rule,
            required: label,
            got: s.spec.kind.as_str(),
        })
    }
}

fn require_index(rule: &'static str, s: &Spectrum, k: usize) -> Result<(), BoundError> {
    // Need lambda_(k+1) = values[k] to exist.
    if k >= 1 && k < s.len() {
        Ok(())
    } else {
        let _ = rule;
        Err(BoundError::IndexOutOfRange {
            k,
            max: s.len().saturating_sub(1),
        })
    }
}

const DIRICHLET: &[ProblemKind] = &[ProblemKind::DirichletPolyharmonic];
const BUCKLING_ANY: &[ProblemKind] = &[ProblemKind::Buckling, ProblemKind::GeneralizedBuckling];

// ---------------------------------------------------------------------------
// Euclidean Dirichlet rules
// ---------------------------------------------------------------------------

/// Gap bound `λ_{k+1} ≤ λ_k + (4l(n+2l−2)/(n²k²))(Σ_{i≤k} λ_i^{1/l})(Σ_{i≤k} λ_i^{(l−1)/l})`.
///
/// Returns the right-hand side; it is `≥ λ_k` by construction. At `l = 1`,
/// `k = 1` this is the classical ratio bound `(1 + 4/n) λ_1`.
pub fn ppw_gap_bound(s: &Spectrum, k: usize) -> Result<f64, BoundError> {
    require_kind("ppw", s, DIRICHLET, "dirichlet_polyharmonic")?;
    if s.spec.domain == Domain::ClosedSphere {
        return Err(BoundError::DomainMismatch {
            rule: "ppw",
            required: "a domain with boundary in Euclidean space",
            got: s.spec.domain.label(),
        });
    }
    require_index("ppw", s, k)?;
    if !(s.values[0] > 0.0) {
        return Err(BoundError::ZeroLambdaOne { rule: "ppw" });
    }
    let (n, l) = (s.spec.n, s.spec.l);
    let coef = 4.0 * l as f64 * (n + 2 * l - 2) as f64 / ((n * n) as f64 * (k * k) as f64);
    let s_1l: f64 = s.values[..k].iter().map(|&v| lambda_pow(v, 1, l)).sum();
    let s_lm1: f64 = s.values[..k].iter().map(|&v| lambda_pow(v, l - 1, l)).sum();
    Ok(s.values[k - 1] + coef * s_1l * s_lm1)
}

/// Residual `kn/4 − Σ_{i≤k} λ_i/(λ_{k+1} − λ_i)` of the order-one trace
/// inequality; nonpositive means it holds.
pub fn hile_protter_residual(s: &Spectrum, k: usize) -> Result<f64, BoundError> {
    require_kind("hile-protter", s, DIRICHLET, "dirichlet_polyharmonic")?;
    if s.spec.l != 1 {
        return Err(BoundError::LaplacianOnly {
            rule: "hile-protter",
            l: s.spec.l,
        });
    }
    require_index("hile-protter", s, k)?;
    if !(s.values[0] > 0.0) {
        return Err(BoundError::ZeroLambdaOne {
            rule: "hile-protter",
        });
    }
    let lam_next = s.values[k];
    let mut sum = 0.0;
    for (i, &lam) in s.values[..k].iter().enumerate() {
        let gap = lam_next - lam;
        if gap <= 0.0 {
            return Err(BoundError::GapCollapse { index: i + 1 });
        }
        sum += lam / gap;
    }
    Ok(k as f64 * s.spec.n as f64 / 4.0 - sum)
}

struct QuadraticEval {
    residual: f64,
    lhs: f64,
    rhs: f64,
    bound: f64,
}

fn yang_weak_eval(s: &Spectrum, k: usize) -> Result<QuadraticEval, BoundError> {
    require_kind("yang-weak", s, DIRICHLET, "dirichlet_polyharmonic")?;
    require_index("yang-weak", s, k)?;
    let c = YangConstants::new(s.spec.n, s.spec.l).c;
    let lam_next = s.values[k];
    let lower = &s.values[..k];
    let lhs: f64 = lower.iter().map(|&v| (lam_next - v).powi(2)).sum();
    let rhs: f64 = c * lower.iter().map(|&v| (lam_next - v) * v).sum::<f64>();
    // Larger root of k x² − (2+c) S₁ x + (1+c) S₂ = 0, the x ≥ λ_k beyond
    // which the quadratic relation fails.
    let s1: f64 = lower.iter().sum();
    let s2: f64 = lower.iter().map(|&v| v * v).sum();
    let disc = ((2.0 + c) * s1).powi(2) - 4.0 * k as f64 * (1.0 + c) * s2;
    if disc < 0.0 {
        return Err(BoundError::NegativeDiscriminant { rule: "yang-weak" });
    }
    let bound = ((2.0 + c) * s1 + disc.sqrt()) / (2.0 * k as f64);
    Ok(QuadraticEval {
        residual: lhs - rhs,
        lhs,
        rhs,
        bound,
    })
}

/// Weak quadratic inequality `Σ(λ_{k+1}−λ_i)² ≤ c Σ(λ_{k+1}−λ_i)λ_i`.
///
/// Returns `(residual, bound)`: the residual of the inequality and the larger
/// root of the quadratic in `x` through which it bounds `λ_{k+1}`. At `l = 1`
/// the residual is Yang's classical expression term for term.
pub fn yang_weak_bound(s: &Spectrum, k: usize) -> Result<(f64, f64), BoundError> {
    yang_weak_eval(s, k).map(|e| (e.residual, e.bound))
}

/// Residual of the strong quadratic inequality
/// `Σ(λ_{k+1}−λ_i)² ≤ √c (Σ(λ_{k+1}−λ_i)² λ_i^{(l−1)/l})^{1/2} (Σ(λ_{k+1}−λ_i) λ_i^{1/l})^{1/2}`.
pub fn yang_strong_residual(s: &Spectrum, k: usize) -> Result<f64, BoundError> {
    yang_strong_eval(s, k).map(|e| e.0)
}

fn yang_strong_eval(s: &Spectrum, k: usize) -> Result<(f64, f64, f64), BoundError> {
    require_kind("yang-strong", s, DIRICHLET, "dirichlet_polyharmonic")?;
    require_index("yang-strong", s, k)?;
    let (n, l) = (s.spec.n, s.spec.l);
    let c = YangConstants::new(n, l).c;
    let lam_next = s.values[k];
    let lower = &s.values[..k];
    let lhs: f64 = lower.iter().map(|&v| (lam_next - v).powi(2)).sum();
    let t1: f64 = lower
        .iter()
        .map(|&v| (lam_next - v).powi(2) * lambda_pow(v, l - 1, l))
        .sum();
    let t2: f64 = lower
        .iter()
        .map(|&v| (lam_next - v) * lambda_pow(v, 1, l))
        .sum();
    let rhs = c.sqrt() * t1.max(0.0).sqrt() * t2.max(0.0).sqrt();
    Ok((lhs - rhs, lhs, rhs))
}

fn mean_and_variance(values: &[f64]) -> (f64, f64) {
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    let var = values.iter().map(|&v| (v - mean).powi(2)).sum::<f64>() / k;
    (mean, var)
}

/// Explicit bound `m + D + sqrt(D² − v)` with
/// `D = (2l(n+2l−2)/(k²n²))(Σλ_i^{(l−1)/l})(Σλ_i^{1/l})`, `m` the mean and
/// `v` the variance of `λ_1, …, λ_k`.
pub fn explicit_bound_a(s: &Spectrum, k: usize) -> Result<f64, BoundError> {
    require_kind("cor3.1a", s, DIRICHLET, "dirichlet_polyharmonic")?;
    require_index("cor3.1a", s, k)?;
    let (n, l) = (s.spec.n, s.spec.l);
    let lower = &s.values[..k];
    let (mean, var) = mean_and_variance(lower);
    let coef = 2.0 * l as f64 * (n + 2 * l - 2) as f64 / ((k * k) as f64 * (n * n) as f64);
    let s_lm1: f64 = lower.iter().map(|&v| lambda_pow(v, l - 1, l)).sum();
    let s_1l: f64 = lower.iter().map(|&v| lambda_pow(v, 1, l)).sum();
    let d = coef * s_lm1 * s_1l;
    let disc = d * d - var;
    if disc < 0.0 {
        return Err(BoundError::NegativeDiscriminant { rule: "cor3.1a" });
    }
    Ok(mean + d + disc.sqrt())
}

/// Explicit bound `(1 + c/2) m + sqrt((c m / 2)² − (1 + c) v)`.
///
/// A negative radicand (possible when the spectrum variance is too large for
/// the formula's hypotheses) is reported as an error, never clamped.
pub fn explicit_bound_b(s: &Spectrum, k: usize) -> Result<f64, BoundError> {
    require_kind("cor3.1b", s, DIRICHLET, "dirichlet_polyharmonic")?;
    require_index("cor3.1b", s, k)?;
    let constants = YangConstants::new(s.spec.n, s.spec.l);
    let (mean, var) = mean_and_variance(&s.values[..k]);
    let disc = (constants.half_c * mean).powi(2) - (1.0 + constants.c) * var;
    if disc < 0.0 {
        return Err(BoundError::NegativeDiscriminant { rule: "cor3.1b" });
    }
    Ok((1.0 + constants.half_c) * mean + disc.sqrt())
}

/// Residual of the low-order sum bound
/// `Σ_{i=2}^{n+1} λ_i + Σ_{i=1}^{n−1} (2(l−1)i/(2l+i−1))(λ_{n+1−i} − λ_1) ≤ (n + 4l(2l−1)) λ_1`.
///
/// The constant reduces to `n + 4` at `l = 1` and `n + 24` at `l = 2`.
pub fn low_order_sum_residual(s: &Spectrum) -> Result<f64, BoundError> {
    low_order_sum_eval(s).map(|e| e.0)
}

/// The additive constant `n + 4l(2l−1)` of the low-order sum bound.
pub fn low_order_sum_constant(n: u32, l: u32) -> f64 {
    (n + 4 * l * (2 * l - 1)) as f64
}

fn low_order_sum_eval(s: &Spectrum) -> Result<(f64, f64, f64), BoundError> {
    require_kind("thm4.1", s, DIRICHLET, "dirichlet_polyharmonic")?;
    let n = s.spec.n as usize;
    if s.len() < n + 1 {
        return Err(BoundError::TooFewEigenvalues {
            rule: "thm4.1",
            needed: n + 1,
            got: s.len(),
        });
    }
    if !(s.values[0] > 0.0) {
        return Err(BoundError::ZeroLambdaOne { rule: "thm4.1" });
    }
    let l = s.spec.l;
    let lam1 = s.values[0];
    let mut lhs: f64 = s.values[1..=n].iter().sum();
    for i in 1..=n.saturating_sub(1) {
        let w = 2.0 * (l - 1) as f64 * i as f64 / (2 * l as usize + i - 1) as f64;
        lhs += w * (s.lambda(n + 1 - i) - lam1);
    }
    let rhs = low_order_sum_constant(s.spec.n, l) * lam1;
    Ok((lhs - rhs, lhs, rhs))
}

// ---------------------------------------------------------------------------
// Buckling rules
// ---------------------------------------------------------------------------

/// Residual of `Σ_{i=1}^{n} Λ_{i+1} + 4(Λ_2 − Λ_1)/(n+4) ≤ (n+4) Λ_1` for the
/// buckling problem; the gap term makes it strictly stronger than the plain
/// sum bound.
pub fn buckling_sum_residual(s: &Spectrum) -> Result<f64, BoundError> {
    buckling_sum_eval(s).map(|e| e.0)
}

fn buckling_sum_eval(s: &Spectrum) -> Result<(f64, f64, f64), BoundError> {
    require_kind("thm4.2", s, &[ProblemKind::Buckling], "buckling")?;
    let n = s.spec.n as usize;
    if s.len() < n + 1 {
        return Err(BoundError::TooFewEigenvalues {
            rule: "thm4.2",
            needed: n + 1,
            got: s.len(),
        });
    }
    if !(s.values[0] > 0.0) {
        return Err(BoundError::ZeroLambdaOne { rule: "thm4.2" });
    }
    let lam1 = s.values[0];
    let nf = s.spec.n as f64;
    let lhs = s.values[1..=n].iter().sum::<f64>() + 4.0 * (s.lambda(2) - lam1) / (nf + 4.0);
    let rhs = (nf + 4.0) * lam1;
    Ok((lhs - rhs, lhs, rhs))
}

/// Residual of the strict inequality
/// `Σ_{m=1}^{n} (m/(2l+m))(Λ_{n+2−m} − Λ_1) < 4(l−1) Λ_1` for `l ≥ 2`.
///
/// Strictness cannot be distinguished numerically, so callers should compare
/// against `+tolerance · 4(l−1)Λ_1`.
pub fn buckling_general_residual(s: &Spectrum) -> Result<f64, BoundError> {
    buckling_general_eval(s).map(|e| e.0)
}

fn buckling_general_eval(s: &Spectrum) -> Result<(f64, f64, f64), BoundError> {
    require_kind("thm4.3", s, BUCKLING_ANY, "buckling or generalized_buckling")?;
    let l = s.spec.l;
    if l < 2 {
        return Err(BoundError::UnsupportedOrder {
            rule: "thm4.3",
            l,
            minimum: 2,
        });
    }
    let n = s.spec.n as usize;
    if s.len() < n + 1 {
        return Err(BoundError::TooFewEigenvalues {
            rule: "thm4.3",
            needed: n + 1,
            got: s.len(),
        });
    }
    let lam1 = s.values[0];
    let mut lhs = 0.0;
    for m in 1..=n {
        lhs += m as f64 / (2 * l as usize + m) as f64 * (s.lambda(n + 2 - m) - lam1);
    }
    let rhs = 4.0 * (l - 1) as f64 * lam1;
    Ok((lhs - rhs, lhs, rhs))
}

// ---------------------------------------------------------------------------
// Sphere-domain rules
// ---------------------------------------------------------------------------

fn require_sphere(
    rule: &'static str,
    s: &Spectrum,
    a: &SphereCoefficients,
) -> Result<(), BoundError> {
    require_kind(rule, s, DIRICHLET, "dirichlet_polyharmonic")?;
    match &s.spec.domain {
        Domain::ClosedSphere | Domain::External(_) => {}
        other => {
            return Err(BoundError::DomainMismatch {
                rule,
                required: "closed_sphere or external sphere-domain data",
                got: other.label(),
            })
        }
    }
    if a.n != s.spec.n || a.l != s.spec.l {
        return Err(BoundError::CoefficientMismatch {
            spec_n: s.spec.n,
            spec_l: s.spec.l,
            coeff_n: a.n,
            coeff_l: a.l,
        });
    }
    Ok(())
}

/// Residual of the sphere-domain quadratic inequality
/// `Σ(λ_{k+1}−λ_i)² ≤ (1/n) (Σ(λ_{k+1}−λ_i)² P(λ_i))^{1/2} (Σ(λ_{k+1}−λ_i)(n²+4λ_i^{1/l}))^{1/2}`
/// with `P(λ) = |a_{l−1}|λ^{(l−1)/l} + … + |a_1|λ^{1/l} + |a_0|`.
pub fn sphere_yang_residual(
    s: &Spectrum,
    k: usize,
    a: &SphereCoefficients,
) -> Result<f64, BoundError> {
    sphere_yang_eval(s, k, a).map(|e| e.0)
}

fn sphere_yang_eval(
    s: &Spectrum,
    k: usize,
    a: &SphereCoefficients,
) -> Result<(f64, f64, f64), BoundError> {
    require_sphere("thm5.1", s, a)?;
    require_index("thm5.1", s, k)?;
    let (n, l) = (s.spec.n, s.spec.l);
    let n2 = (n * n) as f64;
    let lam_next = s.values[k];
    let lower = &s.values[..k];
    let lhs: f64 = lower.iter().map(|&v| (lam_next - v).powi(2)).sum();
    let t1: f64 = lower
        .iter()
        .map(|&v| (lam_next - v).powi(2) * a.weight(v))
        .sum();
    let t2: f64 = lower
        .iter()
        .map(|&v| (lam_next - v) * (n2 + 4.0 * lambda_pow(v, 1, l)))
        .sum();
    let rhs = t1.max(0.0).sqrt() * t2.max(0.0).sqrt() / n as f64;
    Ok((lhs - rhs, lhs, rhs))
}

/// Sphere-domain explicit bound
/// `m + T + sqrt(T² − v)` with `T = (ΣP(λ_i))(kn² + 4Σλ_i^{1/l})/(2n²k²)`.
pub fn sphere_explicit_bound_a(
    s: &Spectrum,
    k: usize,
    a: &SphereCoefficients,
) -> Result<f64, BoundError> {
    require_sphere("cor5.1a", s, a)?;
    require_index("cor5.1a", s, k)?;
    let (n, l) = (s.spec.n, s.spec.l);
    let n2 = (n * n) as f64;
    let lower = &s.values[..k];
    let (mean, var) = mean_and_variance(lower);
    let sp: f64 = lower.iter().map(|&v| a.weight(v)).sum();
    let s_1l: f64 = lower.iter().map(|&v| lambda_pow(v, 1, l)).sum();
    let t = 1.0 / (2.0 * n2 * (k * k) as f64) * sp * (k as f64 * n2 + 4.0 * s_1l);
    let disc = t * t - var;
    if disc < 0.0 {
        return Err(BoundError::NegativeDiscriminant { rule: "cor5.1a" });
    }
    Ok(mean + t + disc.sqrt())
}

/// Sphere-domain explicit bound `U + sqrt(U² − V)` with
/// `U = (1/k)Σλ_i + (1/(2n²k)) Σ P(λ_i)(n² + 4λ_i^{1/l})` and
/// `V = (1/k)Σλ_i² + (1/(n²k)) Σ λ_i P(λ_i)(n² + 4λ_i^{1/l})`.
pub fn sphere_explicit_bound_b(
    s: &Spectrum,
    k: usize,
    a: &SphereCoefficients,
) -> Result<f64, BoundError> {
    require_sphere("cor5.1b", s, a)?;
    require_index("cor5.1b", s, k)?;
    let (n, l) = (s.spec.n, s.spec.l);
    let n2 = (n * n) as f64;
    let kf = k as f64;
    let lower = &s.values[..k];
    let mut u = lower.iter().sum::<f64>() / kf;
    let mut v = lower.iter().map(|&x| x * x).sum::<f64>() / kf;
    for &lam in lower {
        let w = a.weight(lam) * (n2 + 4.0 * lambda_pow(lam, 1, l));
        u += w / (2.0 * n2 * kf);
        v += lam * w / (n2 * kf);
    }
    let disc = u * u - v;
    if disc < 0.0 {
        return Err(BoundError::NegativeDiscriminant { rule: "cor5.1b" });
    }
    Ok(u + disc.sqrt())
}

// ---------------------------------------------------------------------------
// Rule registry
// ---------------------------------------------------------------------------

/// Identifier for one of the implemented inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Ppw,
    HileProtter,
    YangWeak,
    YangStrong,
    Cor31A,
    Cor31B,
    Thm41,
    Thm42,
    Thm43,
    Thm51,
    Cor51A,
    Cor51B,
}

impl Rule {
    pub const ALL: [Rule; 12] = [
        Rule::Ppw,
        Rule::HileProtter,
        Rule::YangWeak,
        Rule::YangStrong,
        Rule::Cor31A,
        Rule::Cor31B,
        Rule::Thm41,
        Rule::Thm42,
        Rule::Thm43,
        Rule::Thm51,
        Rule::Cor51A,
        Rule::Cor51B,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Rule::Ppw => "ppw",
            Rule::HileProtter => "hile-protter",
            Rule::YangWeak => "yang-weak",
            Rule::YangStrong => "yang-strong",
            Rule::Cor31A => "cor3.1a",
            Rule::Cor31B => "cor3.1b",
            Rule::Thm41 => "thm4.1",
            Rule::Thm42 => "thm4.2",
            Rule::Thm43 => "thm4.3",
            Rule::Thm51 => "thm5.1",
            Rule::Cor51A => "cor5.1a",
            Rule::Cor51B => "cor5.1b",
        }
    }

    /// Whether the rule is indexed by `k` (the others consume a fixed prefix).
    pub fn uses_k(&self) -> bool {
        !matches!(self, Rule::Thm41 | Rule::Thm42 | Rule::Thm43)
    }

    /// Problem kind the rule's hypotheses require.
    pub fn required_kind(&self) -> &'static str {
        match self {
            Rule::Thm42 => "buckling",
            Rule::Thm43 => "buckling or generalized_buckling",
            _ => "dirichlet_polyharmonic",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .iter()
            .copied()
            .find(|r| r.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = Rule::ALL.iter().map(|r| r.id()).collect();
                format!("unknown rule `{s}`; expected one of {}", ids.join(", "))
            })
    }
}

fn base_inputs(s: &Spectrum) -> BTreeMap<String, f64> {
    let mut m = BTreeMap::new();
    m.insert("n".into(), s.spec.n as f64);
    m.insert("l".into(), s.spec.l as f64);
    m.insert("tolerance".into(), s.tolerance);
    m
}

/// Applies one rule to a spectrum and packages the outcome as a
/// [`BoundReport`]; pass/fail slack is scaled by the spectrum's tolerance.
pub fn evaluate(rule: Rule, s: &Spectrum, k: Option<usize>) -> Result<BoundReport, BoundError> {
    let need_k = || k.ok_or(BoundError::MissingIndex { rule: rule.id() });
    let tol = s.tolerance;
    match rule {
        Rule::Ppw => {
            let k = need_k()?;
            let bound = ppw_gap_bound(s, k)?;
            let mut inputs = base_inputs(s);
            inputs.insert(
                "coef".into(),
                4.0 * s.spec.l as f64 * (s.spec.n + 2 * s.spec.l - 2) as f64
                    / ((s.spec.n * s.spec.n) as f64 * (k * k) as f64),
            );
            Ok(BoundReport::from_bound(
                rule.id(),
                k,
                bound,
                s.values[k],
                tol,
                inputs,
            ))
        }
        Rule::HileProtter => {
            let k = need_k()?;
            let residual = hile_protter_residual(s, k)?;
            // residual = RHS-of-claim − sum; report sides so the slack is
            // normalized by the larger of the two.
            let rhs_claim = k as f64 * s.spec.n as f64 / 4.0;
            let sum = rhs_claim - residual;
            Ok(BoundReport::from_sides(
                rule.id(),
                Some(k),
                rhs_claim,
                sum,
                tol,
                base_inputs(s),
            ))
        }
        Rule::YangWeak => {
            let k = need_k()?;
            let eval = yang_weak_eval(s, k)?;
            let mut inputs = base_inputs(s);
            inputs.insert("c".into(), YangConstants::new(s.spec.n, s.spec.l).c);
            Ok(BoundReport::from_sides(rule.id(), Some(k), eval.lhs, eval.rhs, tol, inputs)
                .with_bound(eval.bound))
        }
        Rule::YangStrong => {
            let k = need_k()?;
            let (_, lhs, rhs) = yang_strong_eval(s, k)?;
            let mut inputs = base_inputs(s);
            inputs.insert("c".into(), YangConstants::new(s.spec.n, s.spec.l).c);
            Ok(BoundReport::from_sides(
                rule.id(),
                Some(k),
                lhs,
                rhs,
                tol,
                inputs,
            ))
        }
        Rule::Cor31A => {
            let k = need_k()?;
            let bound = explicit_bound_a(s, k)?;
            Ok(BoundReport::from_bound(
                rule.id(),
                k,
                bound,
                s.values[k],
                tol,
                base_inputs(s),
            ))
        }
        Rule::Cor31B => {
            let k = need_k()?;
            let bound = explicit_bound_b(s, k)?;
            let mut inputs = base_inputs(s);
            inputs.insert("c".into(), YangConstants::new(s.spec.n, s.spec.l).c);
            Ok(BoundReport::from_bound(
                rule.id(),
                k,
                bound,
                s.values[k],
                tol,
                inputs,
            ))
        }
        Rule::Thm41 => {
            let (_, lhs, rhs) = low_order_sum_eval(s)?;
            let mut inputs = base_inputs(s);
            inputs.insert(
                "constant".into(),
                low_order_sum_constant(s.spec.n, s.spec.l),
            );
            Ok(BoundReport::from_sides(rule.id(), None, lhs, rhs, tol, inputs))
        }
        Rule::Thm42 => {
            let (_, lhs, rhs) = buckling_sum_eval(s)?;
            Ok(BoundReport::from_sides(
                rule.id(),
                None,
                lhs,
                rhs,
                tol,
                base_inputs(s),
            ))
        }
        Rule::Thm43 => {
            // Strict inequality: checked against a slack scaled by the
            // right-hand side 4(l−1)Λ_1.
            let (_, lhs, rhs) = buckling_general_eval(s)?;
            Ok(BoundReport::from_sides_with_scale(
                rule.id(),
                None,
                lhs,
                rhs,
                rhs,
                tol,
                base_inputs(s),
            ))
        }
        Rule::Thm51 | Rule::Cor51A | Rule::Cor51B => {
            let k = need_k()?;
            let coeffs = SphereCoefficients::new(s.spec.n, s.spec.l);
            let mut inputs = base_inputs(s);
            for (j, a) in coeffs.abs_a.iter().enumerate() {
                inputs.insert(format!("abs_a{j}"), *a);
            }
            // A whole sphere has empty boundary (λ_1 = 0); applying the
            // bounded-domain statement there leans on the abstract
            // inequality's empty-boundary allowance, so mark the report.
            if s.spec.domain == Domain::ClosedSphere {
                inputs.insert("boundaryless_extension".into(), 1.0);
            }
            match rule {
                Rule::Thm51 => {
                    let (_, lhs, rhs) = sphere_yang_eval(s, k, &coeffs)?;
                    Ok(BoundReport::from_sides(
                        rule.id(),
                        Some(k),
                        lhs,
                        rhs,
                        tol,
                        inputs,
                    ))
                }
                Rule::Cor51A => {
                    let bound = sphere_explicit_bound_a(s, k, &coeffs)?;
                    Ok(BoundReport::from_bound(
                        rule.id(),
                        k,
                        bound,
                        s.values[k],
                        tol,
                        inputs,
                    ))
                }
                Rule::Cor51B => {
                    let bound = sphere_explicit_bound_b(s, k, &coeffs)?;
                    Ok(BoundReport::from_bound(
                        rule.id(),
                        k,
                        bound,
                        s.values[k],
                        tol,
                        inputs,
                    ))
                }
                _ => unreachable!(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{ProblemSpec, SpectrumSource};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn interval_membrane(count: usize) -> Spectrum {
        let values = (1..=count).map(|i| (i as f64 * PI).powi(2)).collect();
        Spectrum::new(
            ProblemSpec::new(ProblemKind::DirichletPolyharmonic, 1, 1, Domain::Interval),
            values,
            SpectrumSource::Analytic,
            1e-10,
        )
    }

    fn sphere_spectrum(n: u32, l: u32, levels: &[(u64, usize)]) -> Spectrum {
        let mut values = Vec::new();
        for &(level, mult) in levels {
            let base = (level * (level + n as u64 - 1)) as f64;
            values.extend(std::iter::repeat_n(base.powi(l as i32), mult));
        }
        Spectrum::new(
            ProblemSpec::new(ProblemKind::DirichletPolyharmonic, l, n, Domain::ClosedSphere),
            values,
            SpectrumSource::Analytic,
            1e-10,
        )
    }

    #[test]
    fn yang_constant_reduces_at_l1() {
        for n in 1..=6 {
            assert_eq!(YangConstants::new(n, 1).c, 4.0 / n as f64);
        }
        assert_eq!(YangConstants::new(1, 2).c, 24.0);
    }

    #[test]
    fn lambda_pow_edges() {
        assert_eq!(lambda_pow(7.5, 0, 3), 1.0);
        assert_eq!(lambda_pow(7.5, 3, 3), 7.5);
        assert_eq!(lambda_pow(0.0, 1, 3), 0.0);
        assert_eq!(lambda_pow(0.0, 0, 3), 1.0);
        assert_relative_eq!(lambda_pow(8.0, 1, 3), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn ppw_interval_k1_is_five_lambda1() {
        let s = interval_membrane(3);
        let bound = ppw_gap_bound(&s, 1).unwrap();
        assert_relative_eq!(bound, 5.0 * PI * PI, max_relative = 1e-14);
        assert!(s.values[1] <= bound);
        // l = 1, k = 1 reduces to (1 + 4/n) λ_1 bit-consistently.
        assert_eq!(bound, s.values[0] + 4.0 / 1.0 * s.values[0]);
    }

    #[test]
    fn ppw_rejects_closed_sphere_and_bad_index() {
        let s = sphere_spectrum(2, 1, &[(0, 1), (1, 3)]);
        assert!(matches!(
            ppw_gap_bound(&s, 1),
            Err(BoundError::DomainMismatch { .. })
        ));
        let s = interval_membrane(3);
        assert!(matches!(
            ppw_gap_bound(&s, 3),
            Err(BoundError::IndexOutOfRange { k: 3, max: 2 })
        ));
        assert!(matches!(
            ppw_gap_bound(&s, 0),
            Err(BoundError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn hile_protter_interval_examples() {
        let s = interval_membrane(3);
        // k = 1: 1/4 − 1/3 < 0
        let r1 = hile_protter_residual(&s, 1).unwrap();
        assert_relative_eq!(r1, 0.25 - 1.0 / 3.0, max_relative = 1e-12);
        // k = 2 in units of π²: (1,4,9): 1/8 + 4/5 = 0.925 ≥ 0.5
        let r2 = hile_protter_residual(&s, 2).unwrap();
        assert_relative_eq!(r2, 0.5 - 0.925, max_relative = 1e-12);
    }

    #[test]
    fn hile_protter_gap_collapse() {
        let s = Spectrum::new(
            ProblemSpec::new(ProblemKind::DirichletPolyharmonic, 1, 2, Domain::Disk),
            vec![1.0, 2.0, 2.0],
            SpectrumSource::External,
            1e-8,
        );
        assert_eq!(
            hile_protter_residual(&s, 2),
            Err(BoundError::GapCollapse { index: 2 })
        );
    }

    #[test]
    fn yang_weak_interval_k2_residual_is_minus_23_pi4() {
        let s = interval_membrane(3);
        let (residual, _) = yang_weak_bound(&s, 2).unwrap();
        assert_relative_eq!(residual, -23.0 * PI.powi(4), max_relative = 1e-12);
    }

    #[test]
    fn yang_weak_degenerate_k1_bound_is_one_plus_c() {
        let s = interval_membrane(2);
        let (_, bound) = yang_weak_bound(&s, 1).unwrap();
        assert_relative_eq!(bound, 5.0 * PI * PI, max_relative = 1e-13);
    }

    #[test]
    fn yang_weak_l1_matches_classical_expression_term_for_term() {
        let s = interval_membrane(6);
        for k in 1..=5 {
            let (residual, _) = yang_weak_bound(&s, k).unwrap();
            let lam_next = s.values[k];
            let classical: f64 = s.values[..k]
                .iter()
                .map(|&v| (lam_next - v) * (lam_next - 5.0 * v))
                .sum();
            assert_relative_eq!(residual, classical, max_relative = 1e-12);
        }
    }

    #[test]
    fn yang_strong_equality_case_at_k1() {
        // λ_2 = (1+c)λ_1 makes the residual vanish identically.
        for (n, l) in [(1u32, 1u32), (2, 2), (3, 2), (1, 3)] {
            let c = YangConstants::new(n, l).c;
            let lam1 = 2.37;
            let s = Spectrum::new(
                ProblemSpec::new(
                    ProblemKind::DirichletPolyharmonic,
                    l,
                    n,
                    Domain::External("equality-case".into()),
                ),
                vec![lam1, (1.0 + c) * lam1],
                SpectrumSource::External,
                1e-8,
            );
            let r = yang_strong_residual(&s, 1).unwrap();
            assert!(
                r.abs() <= 1e-12 * (c * lam1).powi(2),
                "residual {r} not ~0 at n={n}, l={l}"
            );
        }
    }

    #[test]
    fn yang_strong_sign_agrees_with_weak_on_interval() {
        let s = interval_membrane(6);
        for k in 1..=5 {
            let strong = yang_strong_residual(&s, k).unwrap();
            let (weak, _) = yang_weak_bound(&s, k).unwrap();
            assert!(strong <= 0.0, "k={k}: strong residual {strong}");
            assert!(weak <= 0.0, "k={k}: weak residual {weak}");
        }
    }

    #[test]
    fn explicit_bound_a_hand_values() {
        let s = interval_membrane(3);
        // k = 1: collapses to 5 λ_1
        let b1 = explicit_bound_a(&s, 1).unwrap();
        assert_relative_eq!(b1, 5.0 * PI * PI, max_relative = 1e-14);
        // k = 2: m = 2.5π², v = 2.25π⁴, D = 5π² → (7.5 + sqrt(22.75)) π²
        let b2 = explicit_bound_a(&s, 2).unwrap();
        let expected = (7.5 + 22.75f64.sqrt()) * PI * PI;
        assert_relative_eq!(b2, expected, max_relative = 1e-13);
        assert!(b2 >= 9.0 * PI * PI);
    }

    #[test]
    fn explicit_bound_b_hand_values() {
        let s = interval_membrane(3);
        // k = 2: 3·2.5π² + sqrt(25 − 11.25) π²
        let b2 = explicit_bound_b(&s, 2).unwrap();
        let expected = (7.5 + 13.75f64.sqrt()) * PI * PI;
        assert_relative_eq!(b2, expected, max_relative = 1e-13);
        assert!(b2 >= 9.0 * PI * PI);
        // zero-variance degenerate vector: bound = (1 + c) λ
        let flat = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::DirichletPolyharmonic,
                1,
                2,
                Domain::External("flat".into()),
            ),
            vec![3.0, 3.0, 3.0, 4.0],
            SpectrumSource::External,
            1e-8,
        );
        let b = explicit_bound_b(&flat, 3).unwrap();
        assert_relative_eq!(b, (1.0 + 2.0) * 3.0, max_relative = 1e-14);
    }

    #[test]
    fn explicit_bounds_agree_at_k1() {
        let s = interval_membrane(2);
        let a = explicit_bound_a(&s, 1).unwrap();
        let b = explicit_bound_b(&s, 1).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-12);
    }

    #[test]
    fn explicit_bound_b_reports_negative_discriminant() {
        // Variance too large for the hypotheses: (1, 100) at k = 2.
        let s = Spectrum::new(
            ProblemSpec::new(ProblemKind::DirichletPolyharmonic, 1, 1, Domain::Interval),
            vec![1.0, 100.0, 101.0],
            SpectrumSource::External,
            1e-8,
        );
        assert_eq!(
            explicit_bound_b(&s, 2),
            Err(BoundError::NegativeDiscriminant { rule: "cor3.1b" })
        );
    }

    #[test]
    fn low_order_sum_constant_reductions() {
        for n in 1..=8 {
            assert_eq!(low_order_sum_constant(n, 1), (n + 4) as f64);
            assert_eq!(low_order_sum_constant(n, 2), (n + 24) as f64);
        }
    }

    #[test]
    fn low_order_sum_second_term_vanishes_at_l1() {
        // n = 3 analytic-looking spectrum: residual equals λ2+λ3+λ4 − (n+4)λ1.
        let s = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::DirichletPolyharmonic,
                1,
                3,
                Domain::External("ball".into()),
            ),
            vec![1.0, 2.0, 2.1, 2.2, 9.0],
            SpectrumSource::External,
            1e-8,
        );
        let r = low_order_sum_residual(&s).unwrap();
        assert_relative_eq!(r, (2.0 + 2.1 + 2.2) - 7.0, max_relative = 1e-14);
    }

    #[test]
    fn buckling_sum_examples() {
        // Equal-spectrum degenerate vector: residual = −4Λ.
        let flat = Spectrum::new(
            ProblemSpec::new(ProblemKind::Buckling, 2, 3, Domain::External("flat".into())),
            vec![2.0, 2.0, 2.0, 2.0],
            SpectrumSource::External,
            1e-8,
        );
        assert_relative_eq!(
            buckling_sum_residual(&flat).unwrap(),
            -4.0 * 2.0,
            max_relative = 1e-14
        );
        // n = 1, Λ_2 = 5Λ_1 exactly: residual = 16Λ_1/5 > 0 (violation detected).
        let s = Spectrum::new(
            ProblemSpec::new(ProblemKind::Buckling, 2, 1, Domain::Interval),
            vec![1.0, 5.0],
            SpectrumSource::External,
            1e-8,
        );
        let r = buckling_sum_residual(&s).unwrap();
        assert_relative_eq!(r, 16.0 / 5.0, max_relative = 1e-14);
    }

    #[test]
    fn buckling_general_examples() {
        // Equal-spectrum vector: residual = −4(l−1)Λ_1.
        let flat = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::GeneralizedBuckling,
                3,
                2,
                Domain::External("flat".into()),
            ),
            vec![2.0, 2.0, 2.0],
            SpectrumSource::External,
            1e-8,
        );
        assert_relative_eq!(
            buckling_general_residual(&flat).unwrap(),
            -4.0 * 2.0 * 2.0,
            max_relative = 1e-14
        );
        // l=2, n=2 synthetic vector (1, 9, 30): (1/5)·29 + (2/6)·8 − 4 > 0.
        let s = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::GeneralizedBuckling,
                2,
                2,
                Domain::External("synthetic".into()),
            ),
            vec![1.0, 9.0, 30.0],
            SpectrumSource::External,
            1e-8,
        );
        let r = buckling_general_residual(&s).unwrap();
        assert_relative_eq!(r, 5.8 + 8.0 / 3.0 - 4.0, max_relative = 1e-13);
        // order below 2 rejected
        let bad = Spectrum::new(
            ProblemSpec::new(ProblemKind::Buckling, 1, 1, Domain::Interval),
            vec![1.0, 2.0],
            SpectrumSource::External,
            1e-8,
        );
        assert!(matches!(
            buckling_general_residual(&bad),
            Err(BoundError::UnsupportedOrder { minimum: 2, .. })
        ));
    }

    #[test]
    fn sphere_yang_equality_at_k1_on_s2() {
        // S², l = 1: spectrum (0, 2, 2, 2, 6); LHS = 4, RHS = (1/2)·√8·√8 = 4.
        let s = sphere_spectrum(2, 1, &[(0, 1), (1, 3), (2, 1)]);
        let a = SphereCoefficients::new(2, 1);
        let r = sphere_yang_residual(&s, 1, &a).unwrap();
        assert!(r.abs() <= 1e-12 * 4.0, "residual {r}");
        // k = 3 (through the full multiplicity-3 level) also holds.
        let r3 = sphere_yang_residual(&s, 3, &a).unwrap();
        assert!(r3 <= 1e-12 * 4.0);
    }

    #[test]
    fn sphere_yang_l2_on_s2_holds() {
        // Squared spectrum (0, 4, 4, 4, 36) with F_2 = t² − 8t + 4.
        let s = sphere_spectrum(2, 2, &[(0, 1), (1, 3), (2, 1)]);
        let a = SphereCoefficients::new(2, 2);
        assert_eq!(a.abs_a, vec![4.0, 8.0]);
        for k in 1..=4 {
            let r = sphere_yang_residual(&s, k, &a).unwrap();
            assert!(r <= 1e-12 * 36.0f64.powi(2), "k={k}: residual {r}");
        }
    }

    #[test]
    fn sphere_bound_a_collapses_to_abs_a0_at_k1() {
        let s = sphere_spectrum(2, 1, &[(0, 1), (1, 3)]);
        let a = SphereCoefficients::new(2, 1);
        let bound = sphere_explicit_bound_a(&s, 1, &a).unwrap();
        // exact: 0 + 1 + 1 = 2 = λ_2
        assert_eq!(bound, 2.0);
    }

    #[test]
    fn sphere_bound_b_at_k1_with_zero_lambda1() {
        // U = |a_0|/2 · (n² + 0)/n² = 1, V = 0 → bound = 2U = 2 on S², l = 1.
        let s = sphere_spectrum(2, 1, &[(0, 1), (1, 3)]);
        let a = SphereCoefficients::new(2, 1);
        let bound = sphere_explicit_bound_b(&s, 1, &a).unwrap();
        assert_eq!(bound, 2.0);
        assert!(s.values[1] <= bound);
    }

    #[test]
    fn sphere_bound_a_zero_variance_collapses_to_mean_plus_twice_coupling() {
        // All lower eigenvalues equal: the radicand is the coupling term
        // squared, so bound = mean + 2T.
        let s = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::DirichletPolyharmonic,
                1,
                3,
                Domain::External("cap".into()),
            ),
            vec![5.0, 5.0, 5.0, 40.0],
            SpectrumSource::External,
            1e-8,
        );
        let a = SphereCoefficients::new(3, 1);
        let k = 3;
        let bound = sphere_explicit_bound_a(&s, k, &a).unwrap();
        let sp = 3.0 * a.abs_a[0];
        let t = sp * (k as f64 * 9.0 + 4.0 * 15.0) / (2.0 * 9.0 * (k * k) as f64);
        assert_relative_eq!(bound, 5.0 + 2.0 * t, max_relative = 1e-14);
    }

    #[test]
    fn sphere_bound_b_equal_values_match_independent_rederivation() {
        // l = 1 keeps the weight constant at |a_0| = n, so with all lower
        // eigenvalues equal to λ: U = λ + (n² + 4λ)/(2n), V = λ² + λ(n²+4λ)/n.
        let (n, lam, k) = (3u32, 7.0f64, 4usize);
        let s = Spectrum::new(
            ProblemSpec::new(
                ProblemKind::DirichletPolyharmonic,
                1,
                n,
                Domain::External("cap".into()),
            ),
            vec![lam, lam, lam, lam, 90.0],
            SpectrumSource::External,
            1e-8,
        );
        let a = SphereCoefficients::new(n, 1);
        let bound = sphere_explicit_bound_b(&s, k, &a).unwrap();
        let nf = n as f64;
        let u = lam + (nf * nf + 4.0 * lam) / (2.0 * nf);
        let v = lam * lam + lam * (nf * nf + 4.0 * lam) / nf;
        assert_relative_eq!(bound, u + (u * u - v).sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn sphere_bounds_cover_level_two() {
        let s = sphere_spectrum(2, 1, &[(0, 1), (1, 3), (2, 5)]);
        let a = SphereCoefficients::new(2, 1);
        let b4 = sphere_explicit_bound_a(&s, 4, &a).unwrap();
        assert!(b4 >= 6.0, "k=4 bound {b4} should dominate λ_5 = 6");
        let b4b = sphere_explicit_bound_b(&s, 4, &a).unwrap();
        assert!(b4b >= 6.0);
    }

    #[test]
    fn sphere_rules_reject_mismatched_coefficients() {
        let s = sphere_spectrum(2, 2, &[(0, 1), (1, 3)]);
        let wrong = SphereCoefficients::new(2, 1);
        assert!(matches!(
            sphere_yang_residual(&s, 1, &wrong),
            Err(BoundError::CoefficientMismatch { .. })
        ));
        let euclidean = interval_membrane(2);
        let a = SphereCoefficients::new(1, 1);
        assert!(matches!(
            sphere_yang_residual(&euclidean, 1, &a),
            Err(BoundError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn rule_ids_round_trip() {
        for rule in Rule::ALL {
            assert_eq!(rule.id().parse::<Rule>().unwrap(), rule);
        }
        assert!("nonsense".parse::<Rule>().is_err());
    }

    #[test]
    fn evaluate_builds_consistent_reports() {
        let s = interval_membrane(4);
        let report = evaluate(Rule::YangStrong, &s, Some(2)).unwrap();
        assert!(report.holds);
        assert!(report.slack > 0.0);
        assert_eq!(report.k, Some(2));
        assert_eq!(report.inputs["c"], 4.0);

        let report = evaluate(Rule::Ppw, &s, Some(1)).unwrap();
        assert_eq!(report.bound, Some(ppw_gap_bound(&s, 1).unwrap()));
        assert!(report.holds);

        assert!(matches!(
            evaluate(Rule::YangStrong, &s, None),
            Err(BoundError::MissingIndex { .. })
        ));

        let buckling = Spectrum::new(
            ProblemSpec::new(ProblemKind::Buckling, 2, 1, Domain::Interval),
            vec![39.48, 80.76],
            SpectrumSource::External,
            1e-8,
        );
        let report = evaluate(Rule::Thm42, &buckling, None).unwrap();
        assert!(report.holds);
        assert!(matches!(
            evaluate(Rule::Thm42, &s, None),
            Err(BoundError::KindMismatch { .. })
        ));
    }

    #[test]
    fn scale_covariance_of_euclidean_rules() {
        let s = interval_membrane(5);
        for t in [0.5, 2.0, 10.0] {
            let scaled = s.scaled(t);
            for k in 1..=4usize {
                let b0 = ppw_gap_bound(&s, k).unwrap();
                let b1 = ppw_gap_bound(&scaled, k).unwrap();
                assert_relative_eq!(b1, t * b0, max_relative = 1e-12);

                let a0 = explicit_bound_a(&s, k).unwrap();
                let a1 = explicit_bound_a(&scaled, k).unwrap();
                assert_relative_eq!(a1, t * a0, max_relative = 1e-12);

                let (w0, bb0) = yang_weak_bound(&s, k).unwrap();
                let (w1, bb1) = yang_weak_bound(&scaled, k).unwrap();
                assert_relative_eq!(w1, t * t * w0, max_relative = 1e-12);
                assert_relative_eq!(bb1, t * bb0, max_relative = 1e-12);

                let y0 = yang_strong_residual(&s, k).unwrap();
                let y1 = yang_strong_residual(&scaled, k).unwrap();
                assert_relative_eq!(y1, t * t * y0, max_relative = 1e-12);

                let h0 = hile_protter_residual(&s, k).unwrap();
                let h1 = hile_protter_residual(&scaled, k).unwrap();
                assert_relative_eq!(h1, h0, max_relative = 1e-12);
            }
            let r0 = low_order_sum_residual(&s).unwrap();
            let r1 = low_order_sum_residual(&scaled).unwrap();
            assert_relative_eq!(r1, t * r0, max_relative = 1e-12);
        }
    }
}
