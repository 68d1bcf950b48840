//! Universal eigenvalue inequalities for clamped polyharmonic operators.
//!
//! The crate has three layers:
//!
//! * [`spectrum`] — value types for eigenvalue lists tagged with the problem
//!   they solve (operator order `l`, ambient dimension `n`, domain, problem
//!   kind), validation, and a line-oriented JSON file format.
//! * [`bounds`], [`spherepoly`], [`lemmas`] — every universal inequality as a
//!   calculator (explicit upper bound for the next eigenvalue) or residual
//!   checker (`LHS − RHS`, nonpositive meaning the inequality holds), the
//!   exact-rational polynomial recursions feeding the sphere-domain bounds,
//!   and the auxiliary inequalities as executable oracles.
//! * [`solver`] — desk-scale reference spectra: Galerkin discretizations of
//!   the clamped interval/rectangle problems, Bessel cross-product roots for
//!   the clamped disk plate, and closed-form sphere spectra.
//!
//! Everything is pure and immutable; all operations are safe to call from
//! concurrent contexts.

// Validation paths spell positivity checks as `!(x > 0.0)` on purpose: the
// negation is true for NaN, which the suggested `x <= 0.0` would wave through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod lemmas;
pub mod report;
pub mod solver;
pub mod spectrum;
pub mod spherepoly;

pub use bounds::{Rule, YangConstants};
pub use report::BoundReport;
pub use spectrum::{Domain, ProblemKind, ProblemSpec, Spectrum, SpectrumSource};
pub use spherepoly::{RationalPoly, SphereCoefficients};
