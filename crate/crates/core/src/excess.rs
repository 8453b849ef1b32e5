//! Spectral excess versus average excess, and the resulting distance-regularity
//! verdict.
//!
//! For a connected graph with `d + 1` distinct Laplacian eigenvalues the average
//! number of vertices at distance `d` never exceeds `r_d(0)`, and equality holds
//! exactly for distance-regular graphs. The floating-point comparison is
//! three-way: equality within `tol_eq` (relative to `r_d(0)`), strict inequality
//! beyond `10 · tol_eq`, and an inconclusive band between.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eigen::{
    cluster_spectrum, eigenvalues_sym, phi_products, DistinctSpectrum, PhiProducts, SpectrumRaw,
    DEFAULT_CLUSTER_TOL,
};
use crate::error::{Error, Result};
use crate::graph::{
    degree_stats, distance_data, laplacian_matrix, DegreeStats, DistanceData, Graph,
};
use crate::matrix::SymMatrix;
use crate::orthopoly::{
    hoffman_polynomial, predistance_system, spectral_excess_closed_form, PredistanceSystem,
    SpectralMeasure,
};
use crate::poly::Polynomial;

pub const DEFAULT_EQUALITY_TOL: f64 = 1e-6;
/// The combinatorial oracle is skipped above this order.
pub const ORACLE_MAX_ORDER: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    DistanceRegular,
    NotDistanceRegular,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DistanceRegular => "distance_regular",
            Verdict::NotDistanceRegular => "not_distance_regular",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Intersection numbers of a distance-regular graph with diameter `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    /// `b_0, …, b_{D−1}`
    pub b: Vec<usize>,
    /// `c_1, …, c_D`
    pub c: Vec<usize>,
    /// `a_1, …, a_D`
    pub a: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Why the oracle declined to produce an intersection array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRefusal {
    pub reason: String,
    /// First offending `(u, v, i)` with `dist(u, v) = i`, when the failure is a
    /// count mismatch.
    pub witness: Option<(usize, usize, usize)>,
}

impl fmt::Display for OracleRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleOutcome {
    DistanceRegular {
        intersection_array: IntersectionArray,
    },
    Refused {
        refusal: OracleRefusal,
    },
}

impl OracleOutcome {
    pub fn is_distance_regular(&self) -> bool {
        matches!(self, OracleOutcome::DistanceRegular { .. })
    }
}

/// Combinatorial distance-regularity test.
///
/// For every ordered pair `(u, v)` at distance `i`, counts the neighbours `w`
/// of `v` at distance `i − 1`, `i`, `i + 1` from `u`. The graph is
/// distance-regular iff it is regular and these counts depend on `i` alone.
pub fn drg_oracle(
    g: &Graph,
    dd: &DistanceData,
) -> std::result::Result<IntersectionArray, OracleRefusal> {
    let n = g.order();
    let k = g.degree(0);
    if let Some(u) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(OracleRefusal {
            reason: format!(
                "not regular: vertex 0 has degree {k} but vertex {u} has degree {}",
                g.degree(u)
            ),
            witness: None,
        });
    }
    let diameter = dd.diameter();
    // (c_i, a_i, b_i) fixed by the first pair seen at distance i
    let mut table: Vec<Option<(usize, usize, usize)>> = vec![None; diameter + 1];
    for u in 0..n {
        for v in 0..n {
            let i = dd.dist(u, v);
            let mut counts = (0, 0, 0);
            for &w in g.neighbors(v) {
                let j = dd.dist(u, w);
                if j + 1 == i {
                    counts.0 += 1;
                } else if j == i {
                    counts.1 += 1;
                } else {
                    counts.2 += 1;
                }
            }
            match table[i] {
                None => table[i] = Some(counts),
                Some(expected) if expected != counts => {
                    return Err(OracleRefusal {
                        reason: format!(
                            "intersection numbers at distance {i} depend on the pair: \
                             (c,a,b) = {expected:?} elsewhere but {counts:?} for ({u},{v})"
                        ),
                        witness: Some((u, v, i)),
                    });
                }
                Some(_) => {}
            }
        }
    }
    let rows: Vec<(usize, usize, usize)> =
        table.into_iter().map(|t| t.unwrap_or_default()).collect();
    Ok(IntersectionArray {
        b: rows[..diameter].iter().map(|r| r.2).collect(),
        c: rows[1..].iter().map(|r| r.0).collect(),
        a: rows[1..].iter().map(|r| r.1).collect(),
    })
}

/// `k̄_d = (1/n) Σ_u k_d(u)`, which is 0 when `d > D`.
pub fn average_excess(dd: &DistanceData, d: usize) -> Result<f64> {
    if d < dd.diameter() {
        return Err(Error::DiameterExceedsD {
            diameter: dd.diameter(),
            d,
        });
    }
    let total: usize = (0..dd.order()).map(|u| dd.excess_count(u, d)).sum();
    Ok(total as f64 / dd.order() as f64)
}

/// `p_i(x) = r_i(k − x)`, the distance polynomials in the adjacency matrix of a
/// `k`-regular graph.
pub fn adjacency_distance_polys(sys: &PredistanceSystem, g: &Graph) -> Result<Vec<Polynomial>> {
    let k = g.regular_degree().ok_or_else(|| {
        let degrees = g.degrees();
        Error::NotRegular {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
        }
    })?;
    Ok(sys
        .polys
        .iter()
        .map(|r| r.compose_affine(k as f64, -1.0))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    /// Relative eigenvalue clustering tolerance.
    pub tol_eig: f64,
    /// Relative tolerance on `r_d(0) − k̄_d`.
    pub tol_eq: f64,
    pub run_oracle: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            tol_eig: DEFAULT_CLUSTER_TOL,
            tol_eq: DEFAULT_EQUALITY_TOL,
            run_oracle: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcessReport {
    pub d: usize,
    pub diameter: usize,
    /// `k̄_d`
    pub average_excess: f64,
    /// `r_d(0)` by evaluating `r_d`.
    pub spectral_excess: f64,
    /// `r_d(0)` from the `φ_i` closed form.
    pub spectral_excess_closed_form: f64,
    /// `k_d(u)` for every vertex.
    pub per_vertex_excess: Vec<usize>,
    /// `k_2(u)` for every vertex.
    pub distance_two_counts: Vec<usize>,
    pub verdict: Verdict,
    /// `r_d(0) − k̄_d`
    pub equality_gap: f64,
    /// `(r_d(0) − k̄_d) / r_d(0)`
    pub relative_gap: f64,
    /// `max |r_i(L) − A_i|` for `i = 0..=d`.
    pub identity_residuals: Vec<f64>,
    pub oracle: Option<OracleOutcome>,
}

/// Every intermediate of the pipeline for one graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub options: AnalysisOptions,
    pub degree_stats: DegreeStats,
    pub raw_spectrum: SpectrumRaw,
    pub spectrum: DistinctSpectrum,
    pub measure: SpectralMeasure,
    pub phis: PhiProducts,
    pub system: PredistanceSystem,
    pub hoffman: Polynomial,
    /// `max |H(L) − J|`
    pub hoffman_residual: f64,
    pub excess: ExcessReport,
}

fn verdict_for(relative_gap: f64, tol_eq: f64) -> Verdict {
    if relative_gap <= tol_eq {
        Verdict::DistanceRegular
    } else if relative_gap >= 10.0 * tol_eq {
        Verdict::NotDistanceRegular
    } else {
        Verdict::Inconclusive
    }
}

/// Runs the full pipeline with explicit tolerances.
pub fn analyze(g: &Graph, options: &AnalysisOptions) -> Result<Analysis> {
    let n = g.order();
    let l = laplacian_matrix(g);
    let raw_spectrum = eigenvalues_sym(&l)?;
    let spectrum = cluster_spectrum(&raw_spectrum, options.tol_eig)?;
    let d = spectrum.d();
    let measure = SpectralMeasure::from_spectrum(&spectrum);
    let phis = phi_products(&spectrum);
    let system = predistance_system(&measure)?;
    let hoffman = hoffman_polynomial(&measure);
    let hoffman_residual = hoffman.eval_matrix(&l).max_abs_diff(&SymMatrix::ones(n));

    let dd = distance_data(g);
    let average = average_excess(&dd, d)?;
    let spectral = system.spectral_excess();
    let closed = spectral_excess_closed_form(&measure, &phis);
    let equality_gap = spectral - average;
    let relative_gap = equality_gap / spectral;
    if relative_gap < -10.0 * options.tol_eq {
        return Err(Error::BoundViolated { average, spectral });
    }
    let verdict = verdict_for(relative_gap, options.tol_eq);

    let identity_residuals = system
        .eval_all_matrix(&l)
        .iter()
        .enumerate()
        .map(|(i, r)| r.max_abs_diff(&dd.distance_matrix(i)))
        .collect();

    let oracle = (options.run_oracle && n <= ORACLE_MAX_ORDER).then(|| match drg_oracle(g, &dd) {
        Ok(intersection_array) => OracleOutcome::DistanceRegular { intersection_array },
        Err(refusal) => OracleOutcome::Refused { refusal },
    });
    if let Some(outcome) = &oracle {
        let disagrees = match verdict {
            Verdict::DistanceRegular => !outcome.is_distance_regular(),
            Verdict::NotDistanceRegular => outcome.is_distance_regular(),
            Verdict::Inconclusive => false,
        };
        if disagrees {
            let oracle = match outcome {
                OracleOutcome::DistanceRegular { intersection_array } => {
                    format!("distance-regular with intersection array {intersection_array}")
                }
                OracleOutcome::Refused { refusal } => refusal.reason.clone(),
            };
            return Err(Error::OracleMismatch {
                spectral: verdict.to_string(),
                oracle,
            });
        }
    }

    let excess = ExcessReport {
        d,
        diameter: dd.diameter(),
        average_excess: average,
        spectral_excess: spectral,
        spectral_excess_closed_form: closed,
        per_vertex_excess: (0..n).map(|u| dd.excess_count(u, d)).collect(),
        distance_two_counts: (0..n).map(|u| dd.excess_count(u, 2)).collect(),
        verdict,
        equality_gap,
        relative_gap,
        identity_residuals,
        oracle,
    };
    Ok(Analysis {
        options: *options,
        degree_stats: degree_stats(g),
        raw_spectrum,
        spectrum,
        measure,
        phis,
        system,
        hoffman,
        hoffman_residual,
        excess,
    })
}

/// The spectral excess test with default tolerances.
pub fn evaluate_theorem(g: &Graph) -> Result<ExcessReport> {
    analyze(g, &AnalysisOptions::default()).map(|a| a.excess)
}

/// Graphs with three distinct Laplacian eigenvalues: distance-regular exactly
/// when regular, i.e. when `k²̄ = k̄²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThreeEigenvalueDiagnostic {
    pub mean_degree: f64,
    pub mean_square_degree: f64,
    /// `k²̄ − k̄²`
    pub variance_gap: f64,
    /// `γ_1` from the recurrence.
    pub gamma1: f64,
    /// `−1 + k̄ − k²̄/k̄`
    pub gamma1_from_degrees: f64,
    pub regular: bool,
    /// Verdict implied by the degree sequence alone.
    pub degree_verdict: Verdict,
    pub theorem_verdict: Verdict,
    pub consistent: bool,
}

pub fn three_eigenvalue_diagnostic(
    g: &Graph,
    options: &AnalysisOptions,
) -> Result<ThreeEigenvalueDiagnostic> {
    let analysis = analyze(g, options)?;
    if analysis.spectrum.d() != 2 {
        return Err(Error::NotThreeEigenvalues(analysis.spectrum.thetas.len()));
    }
    let DegreeStats {
        mean_degree,
        mean_square_degree,
    } = analysis.degree_stats;
    let regular = g.regular_degree().is_some();
    let degree_verdict = if regular {
        Verdict::DistanceRegular
    } else {
        Verdict::NotDistanceRegular
    };
    let theorem_verdict = analysis.excess.verdict;
    Ok(ThreeEigenvalueDiagnostic {
        mean_degree,
        mean_square_degree,
        variance_gap: mean_square_degree - mean_degree * mean_degree,
        gamma1: analysis.system.gamma(1),
        gamma1_from_degrees: -1.0 + mean_degree - mean_square_degree / mean_degree,
        regular,
        degree_verdict,
        theorem_verdict,
        consistent: degree_verdict == theorem_verdict,
    })
}
