mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use baryspec::{Error as CoreError, Limits};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Core(CoreError::Capacity { .. }) => 3,
            CliError::Core(CoreError::Argument(_) | CoreError::Parse(_)) => 2,
            CliError::Core(_) => 1,
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "baryspec", version, about = "Barycentric refinement, clique complexes and their spectra")]
pub struct Cli {
    /// Maximum number of simplices in any clique complex.
    #[arg(long, global = true, env = "BARYSPEC_MAX_COMPLEX", default_value_t = Limits::DEFAULT_MAX_SIMPLICES)]
    pub max_complex: usize,
    /// Maximum matrix order handed to the dense eigensolver.
    #[arg(long, global = true, env = "BARYSPEC_MAX_EIG", default_value_t = Limits::DEFAULT_MAX_EIG)]
    pub max_eig: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "BARYSPEC_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_simplices: self.max_complex,
            max_eig: self.max_eig,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    Cycle,
    Wheel,
    Octahedron,
    House,
    Torus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Edges,
}

/// Where the input graph comes from: a file (`-` for stdin) or a named family.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Graph file, JSON or edge list (`-` reads stdin).
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Named family: complete-K, cycle-N, wheel-N, octahedron, house, torus-PxQ.
    #[arg(long, short)]
    pub graph: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named graph.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Size of a complete graph.
        #[arg(long)]
        k: Option<usize>,
        /// Length of a cycle or the rim of a wheel.
        #[arg(long)]
        n: Option<usize>,
        /// Torus rows.
        #[arg(long)]
        p: Option<usize>,
        /// Torus columns.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Iterate the barycentric refinement.
    Refine {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        /// Refined graph JSON (with parent simplices).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Measured f-vector of every level.
        #[arg(long)]
        fvector_csv: Option<PathBuf>,
    },
    /// Eigenvalues of an operator on the clique complex.
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// scalar, hodge:K or dirac.
        #[arg(long, default_value = "scalar")]
        operator: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run identity checks; exit 1 if any fails.
    Check {
        #[command(flatten)]
        source: Source,
        /// all|euler|gaussbonnet|handshake|schur|grone|mckean|susy|lidskii|renorm|betti
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cycle length for the renormalization check.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Also check refinements 1..=levels.
        #[arg(long, default_value_t = 0)]
        levels: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Spectral profiles across refinement levels.
    Converge {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Interval `a,b` for sup distances.
        #[arg(long, default_value = "0.05,0.95")]
        interval: String,
        /// Second family to compare against, level by level from the top.
        #[arg(long)]
        compare: Option<String>,
        /// Depth for the comparison family (defaults to --depth).
        #[arg(long)]
        compare_depth: Option<usize>,
        #[arg(long)]
        out_csv: Option<PathBuf>,
        #[arg(long)]
        out_json: Option<PathBuf>,
        #[arg(long)]
        out_svg: Option<PathBuf>,
    },
    /// Exact f-vector table under repeated refinement.
    Fvector {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
