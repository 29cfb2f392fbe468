use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "opalg", version, about = "Verification reports for finite operator-algebra identities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Comparison tolerance for identities.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seed for randomly generated inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curvature identities for an exemplar 4-manifold.
    Manifold(ManifoldArgs),
    /// Clifford relations, span and periodicity for a signature "r,s".
    Clifford(CliffordArgs),
    /// Average an operator into a solution of the quantum vacuum Einstein equation.
    SolveEinstein(SolveArgs),
    /// Null ideal, quotient representation and coupling constant of a state.
    Gns(GnsArgs),
    /// Hodge flow, energy and fixed points.
    Dynamics(DynamicsArgs),
    /// Surface states on the flat 4-torus.
    States(StatesArgs),
    /// Physical constants behind the formal temperature.
    Constants,
}

#[derive(Debug, Args)]
pub struct ManifoldArgs {
    /// s4, t4_flat, s2xs2 or cp2.
    #[arg(required_unless_present = "spec")]
    pub name: Option<String>,
    /// Comma-separated radii or scale; defaults to 1 for every parameter.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<f64>,
    /// Exemplar file {"name": ..., "params": [...]}.
    #[arg(long, conflicts_with = "name")]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CliffordArgs {
    /// Signature "r,s".
    pub signature: String,
    /// Number of tower embeddings sampled for trace invariance.
    #[arg(long, default_value_t = 3)]
    pub levels: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Matrix file for B; a random B is drawn from --seed when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Matrix file for the star; defaults to diag(1,…,1,−1,…,−1).
    #[arg(long)]
    pub star: Option<PathBuf>,
    /// Dimension of the random B.
    #[arg(long, default_value_t = 6)]
    pub dim: usize,
}

#[derive(Debug, Args)]
pub struct GnsArgs {
    /// Summands "k:weight,…".
    #[arg(long)]
    pub algebra: String,
    /// State file {"densities": [...]}; defaults to the trace.
    #[arg(long)]
    pub state: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DynamicsCheck {
    FixedPoint,
    Energy,
    Flow,
    Perturbed,
    All,
}

#[derive(Debug, Args)]
pub struct DynamicsArgs {
    #[arg(long, default_value = "s4")]
    pub manifold: String,
    /// Defaults to 1 for every parameter.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<f64>,
    #[arg(long, value_enum, default_value_t = DynamicsCheck::All)]
    pub check: DynamicsCheck,
    /// Perturbation size, |ε| < 1/2.
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub epsilon: f64,
    /// Perturbation sign, 1 or -1.
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatesCheck {
    Stationarity,
    Homology,
    All,
}

#[derive(Debug, Args)]
pub struct StatesArgs {
    /// Six integers over Σ12, Σ13, Σ14, Σ23, Σ24, Σ34.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    pub sigma: Vec<i64>,
    /// Form file {"coefficients": [[re, im] × 6]}.
    #[arg(long)]
    pub omega: PathBuf,
    #[arg(long, value_enum, default_value_t = StatesCheck::All)]
    pub check: StatesCheck,
    /// Number of random operators for the stationarity check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Perturbation sizes for the perturbed flows.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.1, -0.1])]
    pub epsilon: Vec<f64>,
}
