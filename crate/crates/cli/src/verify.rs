//! The verification matrix: every applicable rule at every valid index.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use polybound::bounds::{self, Rule};
use polybound::solver::{
    disk_clamped_plate_spectrum, interval_buckling_spectrum, interval_polyharmonic_spectrum,
    rectangle_spectrum, sphere_closed_spectrum, SolverError,
};
use polybound::spectrum::{Domain, ProblemKind, Spectrum};
use polybound::BoundReport;

/// One (spectrum, rule, k) evaluation; exactly one of `report`/`error` is set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub spectrum_id: String,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

/// Pinned description of one input spectrum, kept in the report header so
/// reruns are comparable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumInfo {
    pub id: String,
    pub kind: String,
    pub l: u32,
    pub n: u32,
    pub domain: String,
    pub source: String,
    pub count: usize,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyMatrix {
    pub tool: String,
    pub spectra: Vec<SpectrumInfo>,
    pub entries: Vec<VerifyEntry>,
    pub summary: VerifySummary,
}

impl VerifyMatrix {
    /// Zero iff no failures (errors are recorded but do not gate).
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            3
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("spectrum_id,rule,k,residual,bound,holds,slack\n");
        for e in &self.entries {
            let k = e.k.map(|k| k.to_string()).unwrap_or_default();
            match &e.report {
                Some(r) => {
                    let residual = r.residual.map(|v| format!("{v}")).unwrap_or_default();
                    let bound = r.bound.map(|v| format!("{v}")).unwrap_or_default();
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        e.spectrum_id, e.rule, k, residual, bound, r.holds, r.slack
                    ));
                }
                None => {
                    out.push_str(&format!(
                        "{},{},{},,,error,\n",
                        e.spectrum_id, e.rule, k
                    ));
                }
            }
        }
        out
    }
}

/// The (rule, k) pairs whose hypotheses a spectrum satisfies.
///
/// Euclidean-domain Dirichlet spectra (and external ones, taken at face
/// value) get the flat-space rules; closed spheres get the sphere rules;
/// buckling kinds get the low-order buckling sums. The trace rule
/// `hile-protter` is skipped at degenerate gaps (`λ_{k+1} − λ_k` below the
/// spectrum tolerance), where its sum is singular by hypothesis.
pub fn applicable_pairs(s: &Spectrum) -> Vec<(Rule, Option<usize>)> {
    let mut pairs = Vec::new();
    let len = s.len();
    let n = s.spec.n as usize;
    match s.spec.kind {
        ProblemKind::DirichletPolyharmonic => {
            if s.spec.domain == Domain::ClosedSphere {
                for k in 1..len {
                    pairs.push((Rule::Thm51, Some(k)));
                    pairs.push((Rule::Cor51A, Some(k)));
                    pairs.push((Rule::Cor51B, Some(k)));
                }
            } else {
                for k in 1..len {
                    pairs.push((Rule::Ppw, Some(k)));
                    pairs.push((Rule::YangWeak, Some(k)));
                    pairs.push((Rule::YangStrong, Some(k)));
                    pairs.push((Rule::Cor31A, Some(k)));
                    pairs.push((Rule::Cor31B, Some(k)));
                    if s.spec.l == 1 {
                        let gap = s.values[k] - s.values[k - 1];
                        if gap > s.tolerance * s.values[k].abs() {
                            pairs.push((Rule::HileProtter, Some(k)));
                        }
                    }
                }
                if len > n {
                    pairs.push((Rule::Thm41, None));
                }
            }
        }
        ProblemKind::Buckling => {
            if len > n {
                pairs.push((Rule::Thm42, None));
                if s.spec.l >= 2 {
                    pairs.push((Rule::Thm43, None));
                }
            }
        }
        ProblemKind::GeneralizedBuckling => {
            if len > n {
                pairs.push((Rule::Thm43, None));
            }
        }
    }
    pairs
}

/// Runs every applicable rule on every spectrum; entries are evaluated in
/// parallel and sorted before assembly, so the report is order-independent.
pub fn build_matrix(spectra: &[(String, Spectrum)]) -> VerifyMatrix {
    let jobs: Vec<(String, &Spectrum, Rule, Option<usize>)> = spectra
        .iter()
        .flat_map(|(id, s)| {
            applicable_pairs(s)
                .into_iter()
                .map(move |(rule, k)| (id.clone(), s, rule, k))
        })
        .collect();

    let mut entries: Vec<VerifyEntry> = jobs
        .into_par_iter()
        .map(|(id, s, rule, k)| match bounds::evaluate(rule, s, k) {
            Ok(report) => VerifyEntry {
                spectrum_id: id,
                rule: rule.id().to_string(),
                k,
                report: Some(report),
                error: None,
            },
            Err(err) => VerifyEntry {
                spectrum_id: id,
                rule: rule.id().to_string(),
                k,
                report: None,
                error: Some(err.to_string()),
            },
        })
        .collect();
    entries.sort_by(|a, b| {
        (&a.spectrum_id, &a.rule, a.k).cmp(&(&b.spectrum_id, &b.rule, b.k))
    });

    let mut summary = VerifySummary::default();
    for e in &entries {
        match &e.report {
            Some(r) if r.holds => summary.pass += 1,
            Some(_) => summary.fail += 1,
            None => summary.error += 1,
        }
    }

    let spectra_info = spectra
        .iter()
        .map(|(id, s)| SpectrumInfo {
            id: id.clone(),
            kind: s.spec.kind.as_str().to_string(),
            l: s.spec.l,
            n: s.spec.n,
            domain: s.spec.domain.label(),
            source: s.source.label(),
            count: s.len(),
            tolerance: s.tolerance,
        })
        .collect();

    VerifyMatrix {
        tool: format!("polybound {}", env!("CARGO_PKG_VERSION")),
        spectra: spectra_info,
        entries,
        summary,
    }
}

/// The pinned desk-scale battery: clamped intervals of order 1..3, buckling
/// pencils, the unit square membrane and plate, the clamped disk, and closed
/// spheres for n = 2, 3 and l = 1..3. Basis sizes and counts are fixed so
/// reruns are byte-identical and finish well inside a minute.
pub fn builtin_suite() -> Result<Vec<(String, Spectrum)>, SolverError> {
    enum Job {
        Interval { l: u32, basis: usize, count: usize },
        Buckling { l: u32, basis: usize, count: usize },
        Square { l: u32, basis: usize, count: usize },
        Disk { count: usize, m_max: u32 },
        Sphere { n: u32, l: u32, count: usize },
    }
    use Job::*;

    let jobs: Vec<(&str, Job)> = vec![
        ("interval-l1", Interval { l: 1, basis: 30, count: 6 }),
        ("interval-l2", Interval { l: 2, basis: 30, count: 5 }),
        ("interval-l3", Interval { l: 3, basis: 32, count: 4 }),
        ("buckling-l2", Buckling { l: 2, basis: 30, count: 4 }),
        ("gen-buckling-l3", Buckling { l: 3, basis: 32, count: 3 }),
        ("square-l1", Square { l: 1, basis: 24, count: 6 }),
        ("square-l2", Square { l: 2, basis: 20, count: 4 }),
        ("disk-l2", Disk { count: 6, m_max: 6 }),
        ("sphere-n2-l1", Sphere { n: 2, l: 1, count: 9 }),
        ("sphere-n2-l2", Sphere { n: 2, l: 2, count: 9 }),
        ("sphere-n2-l3", Sphere { n: 2, l: 3, count: 9 }),
        ("sphere-n3-l1", Sphere { n: 3, l: 1, count: 11 }),
        ("sphere-n3-l2", Sphere { n: 3, l: 2, count: 11 }),
        ("sphere-n3-l3", Sphere { n: 3, l: 3, count: 11 }),
    ];

    jobs.into_par_iter()
        .map(|(id, job)| {
            let spectrum = match job {
                Interval { l, basis, count } => interval_polyharmonic_spectrum(l, basis, count)?,
                Buckling { l, basis, count } => interval_buckling_spectrum(l, basis, count)?,
                Square { l, basis, count } => rectangle_spectrum(l, 1.0, 1.0, basis, count)?,
                Disk { count, m_max } => disk_clamped_plate_spectrum(count, m_max)?,
                Sphere { n, l, count } => sphere_closed_spectrum(n, l, count),
            };
            Ok((id.to_string(), spectrum))
        })
        .collect()
}
