use thiserror::Error;

/// Errors raised anywhere in the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input: no vertices declared and no edges listed")]
    EmptyInput,

    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex 0")]
    Disconnected { unreachable: usize },

    #[error("invalid generator parameters for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("index {index} out of range (d = {d})")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("numerical breakdown building predistance polynomial r_{index}: {reason}")]
    Breakdown { index: usize, reason: String },

    #[error("diameter {diameter} exceeds d = {d}; the eigenvalue clustering merged distinct eigenvalues")]
    DiameterExceedsD { diameter: usize, d: usize },

    #[error("graph is not regular (degrees {min_degree}..{max_degree})")]
    NotRegular {
        min_degree: usize,
        max_degree: usize,
    },

    #[error("expected exactly three distinct Laplacian eigenvalues, found {0}")]
    NotThreeEigenvalues(usize),

    #[error("average excess {average} exceeds spectral excess {spectral} beyond tolerance")]
    BoundViolated { average: f64, spectral: f64 },

    #[error("spectral verdict {spectral} contradicts the combinatorial oracle ({oracle})")]
    OracleMismatch { spectral: String, oracle: String },
}

pub type Result<T> = std::result::Result<T, Error>;
