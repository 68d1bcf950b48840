//! Per-rule verification results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Result of applying one inequality at one index.
///
/// `residual` is `LHS − RHS` of the inequality, so nonpositive values mean
/// the inequality holds; for explicit-bound rules `residual = λ_{k+1} − bound`.
/// `slack` normalizes the residual to `−residual / max(|LHS|, |RHS|, tiny)`
/// so that pass/fail margins are dimensionless.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Rule identifier, e.g. `yang-strong`.
    pub rule: String,
    /// 1-based index the rule was applied at, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub holds: bool,
    pub slack: f64,
    /// Constants that entered the evaluation.
    pub inputs: BTreeMap<String, f64>,
}

impl BoundReport {
    /// Builds a report from the two sides of an inequality `lhs ≤ rhs`.
    ///
    /// `tolerance` is the relative slack permitted before a violation is
    /// declared (normally the spectrum's accuracy estimate).
    pub fn from_sides(
        rule: &str,
        k: Option<usize>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        inputs: BTreeMap<String, f64>,
    ) -> BoundReport {
        let residual = lhs - rhs;
        let scale = lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
        BoundReport {
            rule: rule.to_string(),
            k,
            bound: None,
            residual: Some(residual),
            holds: residual <= tolerance * scale,
            slack: -residual / scale,
            inputs,
        }
    }

    /// As [`from_sides`](Self::from_sides) but against an explicitly supplied
    /// scale (used where the inequality pins its own normalization).
    pub fn from_sides_with_scale(
        rule: &str,
        k: Option<usize>,
        lhs: f64,
        rhs: f64,
        scale: f64,
        tolerance: f64,
        inputs: BTreeMap<String, f64>,
    ) -> BoundReport {
        let residual = lhs - rhs;
        let scale = scale.abs().max(f64::MIN_POSITIVE);
        BoundReport {
            rule: rule.to_string(),
            k,
            bound: None,
            residual: Some(residual),
            holds: residual <= tolerance * scale,
            slack: -residual / scale,
            inputs,
        }
    }

    /// Builds a report for an explicit upper bound checked against the next
    /// eigenvalue `λ_{k+1}`.
    pub fn from_bound(
        rule: &str,
        k: usize,
        bound: f64,
        lambda_next: f64,
        tolerance: f64,
        inputs: BTreeMap<String, f64>,
    ) -> BoundReport {
        let mut report = BoundReport::from_sides(rule, Some(k), lambda_next, bound, tolerance, inputs);
        report.bound = Some(bound);
        report
    }

    pub fn with_bound(mut self, bound: f64) -> BoundReport {
        self.bound = Some(bound);
        self
    }
}
