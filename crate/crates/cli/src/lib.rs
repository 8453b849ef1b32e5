//! Command-line front end for the Laplacian spectral excess test.
//!
//! Exit codes: 0 distance-regular, 1 not distance-regular, 2 inconclusive,
//! 64 usage, 65 bad input data, 66 unreadable input, 70 numerical failure.

pub mod json;
pub mod report;
pub mod text;

use std::io::{self, Read};

use clap::{Args, Parser, Subcommand};
use drg_spectral::eigen::{cluster_spectrum, eigenvalues_sym, phi_products, DEFAULT_CLUSTER_TOL};
use drg_spectral::excess::DEFAULT_EQUALITY_TOL;
use drg_spectral::generators::generate_from_spec;
use drg_spectral::graph::laplacian_matrix;
use drg_spectral::{analyze, parse_edge_list, AnalysisOptions, Error, Graph, Verdict};
use thiserror::Error as ThisError;

use crate::report::{ReportDocument, SpectrumDocument, SpectrumInfo};

pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_SOFTWARE: u8 = 70;

const FAMILIES: &str = "families: path:k, cycle:k, complete:k, complete_bipartite:a,b, star:k, \
                        petersen, hypercube:q";

#[derive(Debug, Parser)]
#[command(
    name = "drg-spectral",
    version,
    about = "Decide distance-regularity from the Laplacian spectrum"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the spectral excess test; the exit code carries the verdict.
    Analyze(AnalyzeArgs),
    /// Print the edge list of a generated graph.
    #[command(after_help = FAMILIES)]
    Gen {
        /// `family:params`, e.g. `path:4` or `complete_bipartite:2,3`.
        spec: String,
    },
    /// Print the raw and distinct Laplacian spectrum and the φ_i.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(conflicts_with = "generate")]
    pub input: Option<String>,
    /// Generate the graph instead of reading it (`family:params`).
    #[arg(long = "gen", value_name = "FAMILY:PARAMS")]
    pub generate: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Relative tolerance for merging eigenvalues.
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL, value_parser = positive)]
    pub tol_eig: f64,
}

#[derive(Debug, Args)]
#[command(after_help = FAMILIES)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Relative tolerance on r_d(0) − k_d for the distance-regular verdict.
    #[arg(long, default_value_t = DEFAULT_EQUALITY_TOL, value_parser = positive)]
    pub tol_eq: f64,
    /// Skip the combinatorial cross-check.
    #[arg(long)]
    pub no_oracle: bool,
}

#[derive(Debug, Args)]
#[command(after_help = FAMILIES)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { source, .. } if source.kind() == io::ErrorKind::InvalidData => EXIT_DATA,
            CliError::Io { .. } => EXIT_NO_INPUT,
            CliError::Json(_) => EXIT_SOFTWARE,
            CliError::Core(e) => match e {
                Error::UnknownFamily(_) | Error::InvalidParameter { .. } => EXIT_USAGE,
                Error::EmptyInput
                | Error::Malformed { .. }
                | Error::SelfLoop(_)
                | Error::VertexOutOfRange { .. }
                | Error::Disconnected { .. } => EXIT_DATA,
                _ => EXIT_SOFTWARE,
            },
        }
    }
}

pub fn verdict_exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::DistanceRegular => 0,
        Verdict::NotDistanceRegular => 1,
        Verdict::Inconclusive => 2,
    }
}

/// Output text and exit code of a successful command.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn load_graph(args: &InputArgs, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    match (&args.input, &args.generate) {
        (_, Some(spec)) => Ok(generate_from_spec(spec)?),
        (Some(path), None) => {
            let mut text = String::new();
            let read = if path == "-" {
                stdin.read_to_string(&mut text)
            } else {
                std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
            };
            read.map_err(|source| CliError::Io {
                path: if path == "-" {
                    "stdin".into()
                } else {
                    path.clone()
                },
                source,
            })?;
            Ok(parse_edge_list(&text)?)
        }
        (None, None) => Err(CliError::Usage(
            "no input: give a file, `-` for stdin, or --gen family:params".into(),
        )),
    }
}

pub fn analyze_report(g: &Graph, args: &AnalyzeArgs) -> Result<ReportDocument, CliError> {
    let opts = AnalysisOptions {
        tol_eig: args.input.tol_eig,
        tol_eq: args.tol_eq,
        run_oracle: !args.no_oracle,
    };
    let analysis = analyze(g, &opts)?;
    Ok(ReportDocument::new(g, &analysis))
}

pub fn spectrum_report(g: &Graph, tol_eig: f64) -> Result<SpectrumDocument, CliError> {
    let raw = eigenvalues_sym(&laplacian_matrix(g))?;
    let s = cluster_spectrum(&raw, tol_eig)?;
    let phis = phi_products(&s);
    Ok(SpectrumDocument::new(
        g,
        SpectrumInfo::new(&raw, &s, &phis),
        tol_eig,
    ))
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen { spec } => Ok(Outcome {
            stdout: generate_from_spec(spec)?.to_edge_list(),
            code: 0,
        }),
        Command::Analyze(args) => {
            let g = load_graph(&args.input, stdin)?;
            let doc = analyze_report(&g, args)?;
            let stdout = if args.input.json {
                json::to_string(&doc)?
            } else {
                text::analysis(&doc)
            };
            Ok(Outcome {
                stdout: with_newline(stdout),
                code: verdict_exit_code(doc.excess.verdict),
            })
        }
        Command::Spectrum(args) => {
            let g = load_graph(&args.input, stdin)?;
            let doc = spectrum_report(&g, args.input.tol_eig)?;
            let stdout = if args.input.json {
                json::to_string(&doc)?
            } else {
                text::spectrum(&doc)
            };
            Ok(Outcome {
                stdout: with_newline(stdout),
                code: 0,
            })
        }
    }
}
