//! Problem descriptors, eigenvalue spectra, validation, and file I/O.
//!
//! A [`Spectrum`] is an ascending list of eigenvalues `λ_1 ≤ λ_2 ≤ …` with
//! multiplicity expanded (each repeated eigenvalue occupies one slot),
//! tagged by the [`ProblemSpec`] whose hypotheses it satisfies. Eigenvalues
//! carry units `length^(−2l)` for the Dirichlet polyharmonic problem and
//! `length^(−2)` for the buckling problems.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which eigenvalue problem a spectrum solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    /// `(−Δ)^l u = λ u` with clamped conditions through order `l−1`.
    DirichletPolyharmonic,
    /// `Δ² u = −Λ Δ u` with clamped conditions (`l = 2`).
    Buckling,
    /// `(−Δ)^l u = −Λ Δ u` with clamped conditions, `l ≥ 2`.
    GeneralizedBuckling,
}

impl ProblemKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemKind::DirichletPolyharmonic => "dirichlet_polyharmonic",
            ProblemKind::Buckling => "buckling",
            ProblemKind::GeneralizedBuckling => "generalized_buckling",
        }
    }
}

/// The geometric domain the problem is posed on.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    /// Unit interval `[0, 1]`, so `n = 1`.
    Interval,
    /// Axis-aligned rectangle `[0, w] × [0, h]`, `n = 2`.
    Rectangle { width: f64, height: f64 },
    /// Unit disk, `n = 2`.
    Disk,
    /// The whole unit sphere `S^n` (empty boundary).
    ClosedSphere,
    /// A domain produced elsewhere; the label is free-form.
    External(String),
}

impl Domain {
    /// Ambient dimension forced by the domain, if any.
    pub fn forced_dimension(&self) -> Option<u32> {
        match self {
            Domain::Interval => Some(1),
            Domain::Rectangle { .. } | Domain::Disk => Some(2),
            Domain::ClosedSphere | Domain::External(_) => None,
        }
    }

    /// Whether the domain has a nonempty boundary (forces `λ_1 > 0`).
    pub fn has_boundary(&self) -> bool {
        !matches!(self, Domain::ClosedSphere)
    }

    /// Euclidean domains satisfy the flat-space inequality hypotheses.
    pub fn is_euclidean(&self) -> bool {
        matches!(
            self,
            Domain::Interval | Domain::Rectangle { .. } | Domain::Disk
        )
    }

    pub fn label(&self) -> String {
        match self {
            Domain::Interval => "interval".into(),
            Domain::Rectangle { width, height } => format!("rectangle({width}x{height})"),
            Domain::Disk => "disk".into(),
            Domain::ClosedSphere => "closed_sphere".into(),
            Domain::External(name) => format!("external({name})"),
        }
    }

    pub fn parse(text: &str) -> Result<Domain, String> {
        match text {
            "interval" => return Ok(Domain::Interval),
            "disk" => return Ok(Domain::Disk),
            "closed_sphere" => return Ok(Domain::ClosedSphere),
            _ => {}
        }
        if let Some(rest) = text
            .strip_prefix("rectangle(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let (w, h) = rest
                .split_once('x')
                .ok_or_else(|| format!("malformed rectangle spec `{text}`"))?;
            let width: f64 = w
                .parse()
                .map_err(|_| format!("bad rectangle width `{w}`"))?;
            let height: f64 = h
                .parse()
                .map_err(|_| format!("bad rectangle height `{h}`"))?;
            return Ok(Domain::Rectangle { width, height });
        }
        if let Some(rest) = text
            .strip_prefix("external(")
            .and_then(|r| r.strip_suffix(')'))
        {
            return Ok(Domain::External(rest.to_string()));
        }
        Err(format!("unknown domain `{text}`"))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Identifies which theorem hypotheses a spectrum satisfies.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    /// Operator order: `l = 1` membrane, `l = 2` plate.
    pub l: u32,
    /// Ambient dimension.
    pub n: u32,
    pub domain: Domain,
}

impl ProblemSpec {
    pub fn new(kind: ProblemKind, l: u32, n: u32, domain: Domain) -> Self {
        ProblemSpec { kind, l, n, domain }
    }
}

/// How a spectrum was produced, with the discretization size where relevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    Analytic,
    Galerkin(usize),
    BesselRoots,
    External,
}

impl SpectrumSource {
    /// Conservative relative accuracy used when no sweep measured one.
    pub fn default_tolerance(&self) -> f64 {
        match self {
            SpectrumSource::Analytic => 1e-10,
            SpectrumSource::Galerkin(_) | SpectrumSource::BesselRoots => 1e-8,
            SpectrumSource::External => 1e-8,
        }
    }

    pub fn label(&self) -> String {
        match self {
            SpectrumSource::Analytic => "analytic".into(),
            SpectrumSource::Galerkin(n) => format!("galerkin({n})"),
            SpectrumSource::BesselRoots => "bessel_roots".into(),
            SpectrumSource::External => "external".into(),
        }
    }

    pub fn parse(text: &str) -> Result<SpectrumSource, String> {
        match text {
            "analytic" => return Ok(SpectrumSource::Analytic),
            "bessel_roots" => return Ok(SpectrumSource::BesselRoots),
            "external" => return Ok(SpectrumSource::External),
            _ => {}
        }
        if let Some(rest) = text
            .strip_prefix("galerkin(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let n: usize = rest
                .parse()
                .map_err(|_| format!("bad basis size `{rest}`"))?;
            return Ok(SpectrumSource::Galerkin(n));
        }
        Err(format!("unknown source `{text}`"))
    }
}

/// An ordered eigenvalue list together with its problem and accuracy.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub spec: ProblemSpec,
    /// `λ_1 ≤ λ_2 ≤ …`, multiplicity expanded.
    pub values: Vec<f64>,
    pub source: SpectrumSource,
    /// Estimated relative accuracy of the entries; scales pass/fail margins.
    pub tolerance: f64,
}

impl Spectrum {
    pub fn new(
        spec: ProblemSpec,
        values: Vec<f64>,
        source: SpectrumSource,
        tolerance: f64,
    ) -> Self {
        Spectrum {
            spec,
            values,
            source,
            tolerance,
        }
    }

    /// Number of stored eigenvalues.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i` with the 1-based index convention of the inequalities.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn validate(&self) -> Vec<SpectrumViolation> {
        validate_spectrum(self)
    }

    /// Same spectrum with every eigenvalue multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Spectrum {
        let mut out = self.clone();
        for v in &mut out.values {
            *v *= t;
        }
        out
    }
}

/// One failed invariant, with the offending index where applicable.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumViolation {
    Empty,
    NotSorted { index: usize },
    NegativeValue { index: usize },
    /// The domain has a boundary, so every eigenvalue must be strictly positive.
    NotStrictlyPositive { index: usize },
    NonPositiveTolerance,
    OrderTooSmall { l: u32, minimum: u32 },
    /// The classical buckling problem is the order-two operator by definition.
    BucklingOrderNotTwo { l: u32 },
    DimensionTooSmall,
    DomainDimensionMismatch { expected: u32, got: u32 },
    NonPositiveRectangle { width: f64, height: f64 },
}

impl fmt::Display for SpectrumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumViolation::Empty => write!(f, "eigenvalue list is empty"),
            SpectrumViolation::NotSorted { index } => {
                write!(f, "not sorted ascending @ index {index}")
            }
            SpectrumViolation::NegativeValue { index } => {
                write!(f, "negative eigenvalue @ index {index}")
            }
            SpectrumViolation::NotStrictlyPositive { index } => write!(
                f,
                "domain has boundary but eigenvalue is not strictly positive @ index {index}"
            ),
            SpectrumViolation::NonPositiveTolerance => write!(f, "tolerance must be > 0"),
            SpectrumViolation::OrderTooSmall { l, minimum } => {
                write!(f, "operator order l = {l} below minimum {minimum} for kind")
            }
            SpectrumViolation::BucklingOrderNotTwo { l } => {
                write!(f, "kind buckling implies l = 2, got l = {l}")
            }
            SpectrumViolation::DimensionTooSmall => write!(f, "dimension n must be >= 1"),
            SpectrumViolation::DomainDimensionMismatch { expected, got } => {
                write!(f, "domain forces n = {expected} but spectrum has n = {got}")
            }
            SpectrumViolation::NonPositiveRectangle { width, height } => {
                write!(f, "rectangle sides must be positive, got {width} x {height}")
            }
        }
    }
}

/// Checks every `Spectrum` invariant; empty result means the spectrum is valid.
///
/// Violations are data, not errors: callers decide whether to reject.
pub fn validate_spectrum(s: &Spectrum) -> Vec<SpectrumViolation> {
    let mut out = Vec::new();

    let min_l = match s.spec.kind {
        ProblemKind::GeneralizedBuckling => 2,
        _ => 1,
    };
    if s.spec.l < min_l {
        out.push(SpectrumViolation::OrderTooSmall {
            l: s.spec.l,
            minimum: min_l,
        });
    }
    if s.spec.kind == ProblemKind::Buckling && s.spec.l != 2 {
        out.push(SpectrumViolation::BucklingOrderNotTwo { l: s.spec.l });
    }
    if s.spec.n < 1 {
        out.push(SpectrumViolation::DimensionTooSmall);
    }
    if let Some(expected) = s.spec.domain.forced_dimension() {
        if s.spec.n != expected && s.spec.n >= 1 {
            out.push(SpectrumViolation::DomainDimensionMismatch {
                expected,
                got: s.spec.n,
            });
        }
    }
    if let Domain::Rectangle { width, height } = s.spec.domain {
        if !(width > 0.0 && height > 0.0) {
            out.push(SpectrumViolation::NonPositiveRectangle { width, height });
        }
    }

    if s.values.is_empty() {
        out.push(SpectrumViolation::Empty);
    }
    for (i, &v) in s.values.iter().enumerate() {
        if v < 0.0 || v.is_nan() {
            out.push(SpectrumViolation::NegativeValue { index: i });
        } else if v == 0.0 && s.spec.domain.has_boundary() {
            out.push(SpectrumViolation::NotStrictlyPositive { index: i });
        }
        if i > 0 && !(s.values[i - 1] <= v) {
            out.push(SpectrumViolation::NotSorted { index: i });
        }
    }

    if !(s.tolerance > 0.0) {
        out.push(SpectrumViolation::NonPositiveTolerance);
    }
    out
}

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
    #[error("validation error in {path}: {}", format_violations(.violations))]
    Validation {
        path: String,
        violations: Vec<SpectrumViolation>,
    },
}

fn format_violations(violations: &[SpectrumViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

// On-disk shape. Numbers pass through serde_json, which emits the shortest
// decimal form that parses back to the identical f64, so round trips are
// bit-exact at any precision.
#[derive(Serialize, Deserialize)]
struct SpectrumFile {
    problem: ProblemFile,
    eigenvalues: Vec<f64>,
    source: String,
    tolerance: f64,
}

#[derive(Serialize, Deserialize)]
struct ProblemFile {
    kind: String,
    l: u32,
    n: u32,
    domain: String,
}

fn to_file(s: &Spectrum) -> SpectrumFile {
    SpectrumFile {
        problem: ProblemFile {
            kind: s.spec.kind.as_str().to_string(),
            l: s.spec.l,
            n: s.spec.n,
            domain: s.spec.domain.label(),
        },
        eigenvalues: s.values.clone(),
        source: s.source.label(),
        tolerance: s.tolerance,
    }
}

fn from_file(file: SpectrumFile, path: &str) -> Result<Spectrum, SpectrumError> {
    let parse = |message: String| SpectrumError::Parse {
        path: path.to_string(),
        message,
    };
    let kind = match file.problem.kind.as_str() {
        "dirichlet_polyharmonic" => ProblemKind::DirichletPolyharmonic,
        "buckling" => ProblemKind::Buckling,
        "generalized_buckling" => ProblemKind::GeneralizedBuckling,
        other => return Err(parse(format!("unknown problem kind `{other}`"))),
    };
    let domain = Domain::parse(&file.problem.domain).map_err(parse)?;
    let source = SpectrumSource::parse(&file.source).map_err(parse)?;
    Ok(Spectrum {
        spec: ProblemSpec::new(kind, file.problem.l, file.problem.n, domain),
        values: file.eigenvalues,
        source,
        tolerance: file.tolerance,
    })
}

/// Reads and validates a spectrum file; rejects files failing [`validate_spectrum`].
pub fn read_spectrum<P: AsRef<Path>>(path: P) -> Result<Spectrum, SpectrumError> {
    let path_str = path.as_ref().display().to_string();
    let text = fs::read_to_string(&path).map_err(|source| SpectrumError::Io {
        path: path_str.clone(),
        source,
    })?;
    let file: SpectrumFile =
        serde_json::from_str(&text).map_err(|e| SpectrumError::Parse {
            path: path_str.clone(),
            message: e.to_string(),
        })?;
    let spectrum = from_file(file, &path_str)?;
    let violations = validate_spectrum(&spectrum);
    if !violations.is_empty() {
        return Err(SpectrumError::Validation {
            path: path_str,
            violations,
        });
    }
    Ok(spectrum)
}

/// Writes a validated spectrum; `read_spectrum(write_spectrum(s))` reproduces
/// `s` bit-exactly.
pub fn write_spectrum<P: AsRef<Path>>(s: &Spectrum, path: P) -> Result<(), SpectrumError> {
    let path_str = path.as_ref().display().to_string();
    let violations = validate_spectrum(s);
    if !violations.is_empty() {
        return Err(SpectrumError::Validation {
            path: path_str,
            violations,
        });
    }
    let text = serde_json::to_string_pretty(&to_file(s)).map_err(|e| SpectrumError::Parse {
        path: path_str.clone(),
        message: e.to_string(),
    })?;
    fs::write(&path, text + "\n").map_err(|source| SpectrumError::Io {
        path: path_str,
        source,
    })
}
