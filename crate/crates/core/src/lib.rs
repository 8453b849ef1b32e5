//! Distance-regularity from the Laplacian spectrum.
//!
//! A connected graph with Laplacian eigenvalues `0 = θ_0 < … < θ_d` is
//! distance-regular exactly when the average number of vertices at distance `d`
//! equals the spectral excess `r_d(0)`, where `r_d` is the last Laplacian
//! predistance polynomial. No regularity assumption is needed.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | parsing, Laplacian/adjacency matrices, BFS distances |
//! | [`generators`] | path, cycle, complete, bipartite, star, Petersen, hypercube |
//! | [`eigen`] | Jacobi eigensolver, spectrum clustering, `φ_i`, idempotents |
//! | [`orthopoly`] | inner product, predistance polynomials, Hoffman polynomial |
//! | [`excess`] | the excess comparison, verdict, combinatorial oracle |
//!
//! ```
//! use drg_spectral::{generators::generate_from_spec, excess::{evaluate_theorem, Verdict}};
//!
//! let petersen = generate_from_spec("petersen").unwrap();
//! let report = evaluate_theorem(&petersen).unwrap();
//! assert_eq!(report.verdict, Verdict::DistanceRegular);
//! assert!((report.spectral_excess - 6.0).abs() < 1e-8);
//! ```

pub mod eigen;
pub mod error;
pub mod excess;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod orthopoly;
pub mod poly;

pub use error::{Error, Result};
pub use excess::{analyze, evaluate_theorem, Analysis, AnalysisOptions, ExcessReport, Verdict};
pub use graph::{parse_edge_list, Graph};
pub use matrix::SymMatrix;
pub use poly::Polynomial;
