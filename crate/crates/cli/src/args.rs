use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invnet_core::MethodChoice;

#[derive(Debug, Parser)]
#[command(
    name = "invnet",
    version,
    about = "Equilibria, trajectories and stability of multi-echelon inventory networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Equilibrium levels of an echelon, chain or full network.
    Equilibrium(EquilibriumArgs),
    /// Sampled trajectory as CSV.
    Simulate(SimulateArgs),
    /// Gershgorin bound for echelons; stability condition and Kantorovich test for chains.
    Stability(StabilityArgs),
    /// Chain solution followed by per-echelon disaggregation of a full network.
    TwoPhase(TwoPhaseArgs),
    /// Equilibria over the cartesian product of parameter values.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Dense,
}

impl From<Method> for MethodChoice {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => MethodChoice::Auto,
            Method::Dense => MethodChoice::Dense,
        }
    }
}

#[derive(Debug, Args)]
pub struct EquilibriumArgs {
    /// Path to a JSON model config.
    #[arg(long, short)]
    pub config: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Linear solver for echelon models.
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Decimal places in table output.
    #[arg(long, default_value_t = 3)]
    pub digits: usize,
    /// Also report the single-warehouse aggregate (echelon models only).
    #[arg(long)]
    pub aggregate: bool,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, short)]
    pub config: PathBuf,
    /// End of the time horizon.
    #[arg(long)]
    pub t_max: f64,
    /// Number of intervals; rows are printed at k * t_max / samples for k = 0..=samples.
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    /// Add RK4 reference columns.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 3)]
    pub digits: usize,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[arg(long, short)]
    pub config: PathBuf,
}

#[derive(Debug, Args)]
pub struct TwoPhaseArgs {
    #[arg(long, short)]
    pub config: PathBuf,
    /// Echelon to disaggregate (1-based); all echelons when omitted.
    #[arg(long, value_parser = parse_echelon)]
    pub echelon: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub digits: usize,
}

fn parse_echelon(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("echelons are numbered from 1".into()),
        Ok(e) => Ok(e),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, short)]
    pub config: PathBuf,
    /// `name=v1,v2,...`; repeat for a cartesian product, first flag varying slowest.
    #[arg(long, required = true)]
    pub vary: Vec<String>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, default_value_t = 3)]
    pub digits: usize,
    #[arg(long)]
    pub aggregate: bool,
}
