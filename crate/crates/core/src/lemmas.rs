//! Auxiliary inequalities as executable oracles.
//!
//! These are the moving parts behind the eigenvalue bounds: moment
//! inequalities for normalized eigenfunctions, a constrained minimization on
//! the standard simplex, a Chebyshev-type sum inequality, the reverse
//! Chebyshev inequality, and a rearrangement inequality. Each is implemented
//! as a checker over caller-supplied data plus a seeded randomized suite, so
//! counterexample hunting is deterministic and reproducible.
//!
//! Monotonicity preconditions are enforced rather than sorted on entry — the
//! inequalities are hypothesis-sensitive and silent sorting would mask caller
//! bugs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default seed for all randomized suites; recorded in reports.
pub const DEFAULT_SUITE_SEED: u64 = 20260810;

#[derive(Debug, Error, PartialEq)]
pub enum LemmaError {
    #[error("moment sequence has length {got}, expected l + 1 = {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("input is off the standard simplex: {reason}")]
    OffSimplex { reason: String },
    #[error("sequence `{name}` violates required monotonicity ({required}) at index {index}")]
    NotMonotone {
        name: &'static str,
        required: &'static str,
        index: usize,
    },
    #[error("sequence `{name}` must be nonnegative, got {value} at index {index}")]
    NegativeEntry {
        name: &'static str,
        value: f64,
        index: usize,
    },
    #[error("sequences have mismatched lengths {0} and {1}")]
    UnequalLengths(usize, usize),
    #[error("`perm` is not a permutation of 0..{len}")]
    InvalidPermutation { len: usize },
}

fn check_sorted(
    name: &'static str,
    xs: &[f64],
    nondecreasing: bool,
) -> Result<(), LemmaError> {
    for i in 1..xs.len() {
        let ok = if nondecreasing {
            xs[i - 1] <= xs[i]
        } else {
            xs[i - 1] >= xs[i]
        };
        if !ok {
            return Err(LemmaError::NotMonotone {
                name,
                required: if nondecreasing {
                    "nondecreasing"
                } else {
                    "nonincreasing"
                },
                index: i,
            });
        }
    }
    Ok(())
}

fn check_nonnegative(name: &'static str, xs: &[f64]) -> Result<(), LemmaError> {
    for (i, &x) in xs.iter().enumerate() {
        if !(x >= 0.0) {
            return Err(LemmaError::NegativeEntry {
                name,
                value: x,
                index: i,
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Moment inequalities
// ---------------------------------------------------------------------------

/// Moments `μ_k = ∫ u (−Δ)^k u` of a normalized clamped eigenfunction,
/// `k = 0..l`, with `μ_0 = 1` and `μ_l = λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    pub mu: Vec<f64>,
    /// The eigenvalue (equals `μ_l` up to solver accuracy).
    pub lambda: f64,
}

/// One failed moment inequality.
#[derive(Debug, Clone, PartialEq)]
pub enum MomentViolation {
    /// `μ_k < 0`.
    Negative { k: usize, value: f64 },
    /// `μ_k > λ^{k/l}`.
    AboveEigenvaluePower { k: usize, value: f64, limit: f64 },
    /// `μ_k^{k+1} > μ_{k+1}^k` (log-convexity in power form).
    PowerLogConvexity { k: usize, lhs: f64, rhs: f64 },
    /// `μ_k > sqrt(μ_{k−1} μ_{k+1})` (geometric-mean form).
    GeometricMean { k: usize, value: f64, limit: f64 },
}

impl std::fmt::Display for MomentViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MomentViolation::Negative { k, value } => write!(f, "mu_{k} = {value} < 0"),
            MomentViolation::AboveEigenvaluePower { k, value, limit } => {
                write!(f, "mu_{k} = {value} exceeds lambda^(k/l) = {limit}")
            }
            MomentViolation::PowerLogConvexity { k, lhs, rhs } => {
                write!(f, "mu_{k}^(k+1) = {lhs} exceeds mu_{}^k = {rhs}", k + 1)
            }
            MomentViolation::GeometricMean { k, value, limit } => {
                write!(f, "mu_{k} = {value} exceeds sqrt(mu_{}·mu_{}) = {limit}", k - 1, k + 1)
            }
        }
    }
}

/// Checks the whole set of moment inequalities for order `l`, each within a
/// caller-supplied relative tolerance:
///
/// * `0 ≤ μ_k ≤ λ^{k/l}`,
/// * `μ_k^{k+1} ≤ μ_{k+1}^k`,
/// * `μ_k ≤ sqrt(μ_{k−1} μ_{k+1})`,
///
/// for `k = 1, …, l−1`. Returns the violated inequalities.
pub fn moment_check(
    ms: &MomentSequence,
    l: u32,
    rel_tol: f64,
) -> Result<Vec<MomentViolation>, LemmaError> {
    let expected = l as usize + 1;
    if ms.mu.len() != expected {
        return Err(LemmaError::LengthMismatch {
            expected,
            got: ms.mu.len(),
        });
    }
    let mut out = Vec::new();
    let lambda = ms.lambda;
    let slack = |scale: f64| rel_tol * scale.abs().max(f64::MIN_POSITIVE);
    for k in 1..l as usize {
        let mu_k = ms.mu[k];
        if mu_k < -slack(1.0) {
            out.push(MomentViolation::Negative { k, value: mu_k });
        }
        let limit = crate::bounds::lambda_pow(lambda, k as u32, l);
        if mu_k > limit + slack(limit) {
            out.push(MomentViolation::AboveEigenvaluePower {
                k,
                value: mu_k,
                limit,
            });
        }
        let lhs = mu_k.powi(k as i32 + 1);
        let rhs = ms.mu[k + 1].powi(k as i32);
        if lhs > rhs + slack(rhs) {
            out.push(MomentViolation::PowerLogConvexity { k, lhs, rhs });
        }
        let gm = (ms.mu[k - 1] * ms.mu[k + 1]).sqrt();
        if mu_k > gm + slack(gm) {
            out.push(MomentViolation::GeometricMean {
                k,
                value: mu_k,
                limit: gm,
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Simplex minimization
// ---------------------------------------------------------------------------

/// `f(z) = Σ z_i² / (1 + 4 z_i)` on the closed standard simplex.
pub fn simplex_f(z: &[f64]) -> Result<f64, LemmaError> {
    if z.is_empty() {
        return Err(LemmaError::OffSimplex {
            reason: "empty vector".into(),
        });
    }
    for (i, &zi) in z.iter().enumerate() {
        if !(zi >= -1e-12) {
            return Err(LemmaError::OffSimplex {
                reason: format!("z[{i}] = {zi} is negative"),
            });
        }
    }
    let sum: f64 = z.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(LemmaError::OffSimplex {
            reason: format!("entries sum to {sum}, not 1"),
        });
    }
    Ok(z.iter().map(|&zi| zi * zi / (1.0 + 4.0 * zi)).sum())
}

/// Minimum of `f` over the simplex: attained at the uniform point with value
/// `1/(n+4)`.
pub fn simplex_f_min(n: u32) -> f64 {
    1.0 / (n as f64 + 4.0)
}

/// Exhaustive grid search of `f` over the simplex for small `n` (1, 2 or 3);
/// returns `(min value, argmin)`. Grid coordinates are multiples of `step`.
pub fn simplex_grid_min(n: u32, step: f64) -> (f64, Vec<f64>) {
    assert!((1..=3).contains(&n), "grid search supports n in 1..=3");
    assert!(step > 0.0 && step < 1.0);
    let m = (1.0 / step).round() as usize;
    let h = 1.0 / m as f64;
    let mut best = f64::INFINITY;
    let mut arg = Vec::new();
    let f = |z: &[f64]| -> f64 { z.iter().map(|&zi| zi * zi / (1.0 + 4.0 * zi)).sum() };
    match n {
        1 => {
            best = f(&[1.0]);
            arg = vec![1.0];
        }
        2 => {
            for i in 0..=m {
                let z = [i as f64 * h, (m - i) as f64 * h];
                let v = f(&z);
                if v < best {
                    best = v;
                    arg = z.to_vec();
                }
            }
        }
        3 => {
            for i in 0..=m {
                for j in 0..=(m - i) {
                    let z = [i as f64 * h, j as f64 * h, (m - i - j) as f64 * h];
                    let v = f(&z);
                    if v < best {
                        best = v;
                        arg = z.to_vec();
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    (best, arg)
}

// ---------------------------------------------------------------------------
// Chebyshev-type and rearrangement inequalities
// ---------------------------------------------------------------------------

const REL_TOL: f64 = 1e-12;

fn leq_with_slack(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + REL_TOL * lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE)
}

/// `(Σ a_i² b_i)(Σ a_i c_i) ≤ (Σ a_i²)(Σ a_i b_i c_i)` for nonnegative `a`
/// nonincreasing and `b`, `c` nondecreasing.
pub fn chebyshev_sum_holds(a: &[f64], b: &[f64], c: &[f64]) -> Result<bool, LemmaError> {
    if a.len() != b.len() {
        return Err(LemmaError::UnequalLengths(a.len(), b.len()));
    }
    if a.len() != c.len() {
        return Err(LemmaError::UnequalLengths(a.len(), c.len()));
    }
    check_nonnegative("a", a)?;
    check_nonnegative("b", b)?;
    check_nonnegative("c", c)?;
    check_sorted("a", a, false)?;
    check_sorted("b", b, true)?;
    check_sorted("c", c, true)?;
    let s_aab: f64 = a.iter().zip(b).map(|(&ai, &bi)| ai * ai * bi).sum();
    let s_ac: f64 = a.iter().zip(c).map(|(&ai, &ci)| ai * ci).sum();
    let s_aa: f64 = a.iter().map(|&ai| ai * ai).sum();
    let s_abc: f64 = a
        .iter()
        .zip(b)
        .zip(c)
        .map(|((&ai, &bi), &ci)| ai * bi * ci)
        .sum();
    Ok(leq_with_slack(s_aab * s_ac, s_aa * s_abc))
}

/// Reverse Chebyshev inequality: `Σ a_i b_i ≤ (1/m)(Σ a_i)(Σ b_i)` for `a`
/// nondecreasing and `b` nonincreasing.
pub fn reverse_chebyshev_holds(a: &[f64], b: &[f64]) -> Result<bool, LemmaError> {
    if a.len() != b.len() {
        return Err(LemmaError::UnequalLengths(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(LemmaError::UnequalLengths(0, 0));
    }
    check_sorted("a", a, true)?;
    check_sorted("b", b, false)?;
    let m = a.len() as f64;
    let dot: f64 = a.iter().zip(b).map(|(&x, &y)| x * y).sum();
    let prod = a.iter().sum::<f64>() * b.iter().sum::<f64>() / m;
    Ok(leq_with_slack(dot, prod))
}

/// `Σ c_k d_{perm(k)} ≥ c_1 d_l + c_2 d_{l−1} + … + c_l d_1` for `c`, `d`
/// nondecreasing and any permutation (the reversal minimizes the pairing).
pub fn rearrangement_min(c: &[f64], d: &[f64], perm: &[usize]) -> Result<bool, LemmaError> {
    if c.len() != d.len() {
        return Err(LemmaError::UnequalLengths(c.len(), d.len()));
    }
    check_sorted("c", c, true)?;
    check_sorted("d", d, true)?;
    let len = c.len();
    if perm.len() != len {
        return Err(LemmaError::InvalidPermutation { len });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(LemmaError::InvalidPermutation { len });
        }
        seen[p] = true;
    }
    let permuted: f64 = (0..len).map(|k| c[k] * d[perm[k]]).sum();
    let reversed: f64 = (0..len).map(|k| c[k] * d[len - 1 - k]).sum();
    Ok(leq_with_slack(reversed, permuted))
}

// ---------------------------------------------------------------------------
// Randomized suites
// ---------------------------------------------------------------------------

/// Outcome of a randomized counterexample hunt.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub trials: u64,
    pub seed: u64,
    pub counterexamples: u64,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

fn random_sorted(rng: &mut ChaCha8Rng, len: usize, ascending: bool) -> Vec<f64> {
    let mut v: Vec<f64> = (0..len).map(|_| rng.random_range(0.0..10.0)).collect();
    v.sort_by(|x, y| x.partial_cmp(y).unwrap());
    if !ascending {
        v.reverse();
    }
    v
}

/// Random sorted nonnegative triples fed to [`chebyshev_sum_holds`].
pub fn chebyshev_suite(trials: u64, max_len: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        let len = rng.random_range(1..=max_len);
        let a = random_sorted(&mut rng, len, false);
        let b = random_sorted(&mut rng, len, true);
        let c = random_sorted(&mut rng, len, true);
        if !chebyshev_sum_holds(&a, &b, &c).expect("generated inputs satisfy preconditions") {
            counterexamples += 1;
            first_failure.get_or_insert_with(|| format!("a={a:?} b={b:?} c={c:?}"));
        }
    }
    SuiteOutcome {
        trials,
        seed,
        counterexamples,
        first_failure,
    }
}

/// Random monotone pairs fed to [`reverse_chebyshev_holds`]; entries may be
/// negative (the inequality needs no sign hypothesis).
pub fn reverse_chebyshev_suite(trials: u64, max_len: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        let len = rng.random_range(1..=max_len);
        let mut a: Vec<f64> = (0..len).map(|_| rng.random_range(-5.0..5.0)).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut b: Vec<f64> = (0..len).map(|_| rng.random_range(-5.0..5.0)).collect();
        b.sort_by(|x, y| y.partial_cmp(x).unwrap());
        if !reverse_chebyshev_holds(&a, &b).expect("generated inputs satisfy preconditions") {
            counterexamples += 1;
            first_failure.get_or_insert_with(|| format!("a={a:?} b={b:?}"));
        }
    }
    SuiteOutcome {
        trials,
        seed,
        counterexamples,
        first_failure,
    }
}

/// Random nondecreasing pairs with random permutations fed to
/// [`rearrangement_min`].
pub fn rearrangement_suite(trials: u64, max_len: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        let len = rng.random_range(1..=max_len);
        let c = random_sorted(&mut rng, len, true);
        let d = random_sorted(&mut rng, len, true);
        // Fisher-Yates
        let mut perm: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        if !rearrangement_min(&c, &d, &perm).expect("generated inputs satisfy preconditions") {
            counterexamples += 1;
            first_failure.get_or_insert_with(|| format!("c={c:?} d={d:?} perm={perm:?}"));
        }
    }
    SuiteOutcome {
        trials,
        seed,
        counterexamples,
        first_failure,
    }
}

/// Random simplex samples checked against the minimum `1/(n+4)`.
pub fn simplex_sample_suite(n: u32, trials: u64, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let floor = simplex_f_min(n) - 1e-12;
    let mut counterexamples = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        // Uniform on the simplex: normalized exponentials.
        let mut z: Vec<f64> = (0..n)
            .map(|_| -rng.random_range(f64::MIN_POSITIVE..1.0f64).ln())
            .collect();
        let total: f64 = z.iter().sum();
        for zi in &mut z {
            *zi /= total;
        }
        let v = simplex_f(&z).expect("normalized sample lies on the simplex");
        if v < floor {
            counterexamples += 1;
            first_failure.get_or_insert_with(|| format!("z={z:?} f={v}"));
        }
    }
    SuiteOutcome {
        trials,
        seed,
        counterexamples,
        first_failure,
    }
}
