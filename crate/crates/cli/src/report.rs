//! The JSON report documents.

use drg_spectral::eigen::{DistinctSpectrum, PhiProducts, SpectrumRaw};
use drg_spectral::excess::ExcessReport;
use drg_spectral::graph::{degree_stats, DegreeStats};
use drg_spectral::{Analysis, AnalysisOptions, Graph};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "drg-spectral";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

impl Tool {
    fn current() -> Self {
        Tool {
            name: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub n: usize,
    pub edges: usize,
    pub regular: bool,
    /// The common degree when regular.
    pub degree: Option<usize>,
    #[serde(flatten)]
    pub degree_stats: DegreeStats,
}

impl GraphInfo {
    pub fn new(g: &Graph) -> Self {
        let degree = g.regular_degree();
        GraphInfo {
            n: g.order(),
            edges: g.edge_count(),
            regular: degree.is_some(),
            degree,
            degree_stats: degree_stats(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumInfo {
    /// All Laplacian eigenvalues, ascending.
    pub raw: Vec<f64>,
    /// Distinct eigenvalues `θ_0 = 0 < … < θ_d`.
    pub thetas: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Smallest gap between distinct eigenvalues; absent when `d = 0`.
    pub min_gap: Option<f64>,
    /// Widest spread of raw values merged into one eigenvalue.
    pub max_cluster_width: f64,
    /// `φ_i = Π_{j≠i} (θ_i − θ_j)`
    pub phis: Vec<f64>,
}

impl SpectrumInfo {
    pub fn new(raw: &SpectrumRaw, s: &DistinctSpectrum, phis: &PhiProducts) -> Self {
        SpectrumInfo {
            raw: raw.values.clone(),
            thetas: s.thetas.clone(),
            multiplicities: s.mults.clone(),
            min_gap: s.min_gap,
            max_cluster_width: s.max_cluster_width,
            phis: phis.phis.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredistanceInfo {
    /// `coefficients[i][k]` is the coefficient of `x^k` in `r_i`.
    pub coefficients: Vec<Vec<f64>>,
    /// `α_0, …, α_d`
    pub alpha: Vec<f64>,
    /// `β_0, …, β_{d−1}`
    pub beta: Vec<f64>,
    /// `γ_1, …, γ_d`
    pub gamma: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoffmanInfo {
    pub coefficients: Vec<f64>,
    /// `max |H(L) − J|`
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eig: f64,
    pub eq: f64,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool: Tool,
    pub graph: GraphInfo,
    pub spectrum: SpectrumInfo,
    pub predistance: PredistanceInfo,
    pub hoffman: HoffmanInfo,
    pub excess: ExcessReport,
    pub tolerances: Tolerances,
}

impl ReportDocument {
    pub fn new(g: &Graph, a: &Analysis) -> Self {
        let sys = &a.system;
        let AnalysisOptions {
            tol_eig,
            tol_eq,
            run_oracle,
        } = a.options;
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool: Tool::current(),
            graph: GraphInfo::new(g),
            spectrum: SpectrumInfo::new(&a.raw_spectrum, &a.spectrum, &a.phis),
            predistance: PredistanceInfo {
                coefficients: sys.polys.iter().map(|p| p.coeffs().to_vec()).collect(),
                alpha: sys.alpha.clone(),
                beta: sys.beta.clone(),
                gamma: sys.gamma.clone(),
            },
            hoffman: HoffmanInfo {
                coefficients: a.hoffman.coeffs().to_vec(),
                residual: a.hoffman_residual,
            },
            excess: a.excess.clone(),
            tolerances: Tolerances {
                eig: tol_eig,
                eq: tol_eq,
                oracle: run_oracle,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub schema: u32,
    pub tool: Tool,
    pub graph: GraphInfo,
    pub spectrum: SpectrumInfo,
    pub tol_eig: f64,
}

impl SpectrumDocument {
    pub fn new(g: &Graph, spectrum: SpectrumInfo, tol_eig: f64) -> Self {
        SpectrumDocument {
            schema: SCHEMA_VERSION,
            tool: Tool::current(),
            graph: GraphInfo::new(g),
            spectrum,
            tol_eig,
        }
    }
}
