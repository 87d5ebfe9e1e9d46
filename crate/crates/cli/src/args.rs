use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "netmend",
    version,
    about = "Connectivity repair by node replacement",
    args_override_self = true
)]
pub struct Cli {
    /// Print progress and extra statistics to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay one departure on a graph file and print the hop trace.
    #[command(args_override_self = true)]
    Demo(DemoArgs),
    /// Remove random nodes without repair until the graph disconnects.
    #[command(args_override_self = true)]
    Depletion(DepletionArgs),
    /// Compare replacement costs of several strategies on random graphs.
    #[command(args_override_self = true)]
    Compare(CompareArgs),
    /// Remove every node in turn, repairing each departure.
    #[command(args_override_self = true)]
    Repair(RepairArgs),
    /// Print global and δ-hop criticality of every live node.
    #[command(args_override_self = true)]
    Criticality(CriticalityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieBreakArg {
    Uniform,
    SmallestId,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Edge-list file (`n m` header, then one `u v` pair per line).
    pub graph: PathBuf,
    /// Departing node: `v3`, `3`, or a letter (`a` is node 0).
    #[arg(long)]
    pub remove: String,
    /// central, mps, dmps, mindeg, or dmps:<delta>.
    #[arg(long, default_value = "mps")]
    pub strategy: String,
    /// Hop radius for dmps.
    #[arg(long)]
    pub delta: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// How dmps picks among several δ-noncritical candidates.
    #[arg(long, value_enum, default_value_t = TieBreakArg::Uniform)]
    pub tie_break: TieBreakArg,
    /// Let a δ-noncritical origin leave without any replacement.
    #[arg(long)]
    pub origin_check: bool,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for the trial CSV and summary JSON.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Rejection budget per connected random graph.
    #[arg(long, default_value_t = netmend::generators::DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: u64,
    /// TOML file with defaults for these flags; explicit flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    /// Comma-separated strategy tokens: central, mps, mindeg, dmps:<delta>.
    #[arg(long, default_value = "central,mps,dmps:1,dmps:2")]
    pub strategies: String,
    /// How dmps picks among several δ-noncritical candidates.
    #[arg(long, value_enum, default_value_t = TieBreakArg::Uniform)]
    pub tie_break: TieBreakArg,
    /// Let a δ-noncritical origin leave without any replacement.
    #[arg(long)]
    pub origin_check: bool,
}

#[derive(Debug, Args)]
pub struct DepletionArgs {
    /// er, tree, cycle, path, complete, star, or fixture:<name>.
    #[arg(long, default_value = "er")]
    pub generator: String,
    #[arg(long, default_value_t = 50)]
    pub n: usize,
    /// Edge probability for er.
    #[arg(long, default_value_t = 0.04, conflicts_with = "target_degree")]
    pub p: f64,
    /// Calibrate p for er from a mean degree instead.
    #[arg(long)]
    pub target_degree: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[command(flatten)]
    pub run: ExperimentArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// er, tree, cycle, path, complete, star, or fixture:<name>.
    #[arg(long, default_value = "er")]
    pub generator: String,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    /// Mean degree used to calibrate p for er.
    #[arg(long, default_value_t = 3.1)]
    pub target_degree: f64,
    /// Edge probability for er, instead of --target-degree.
    #[arg(long, conflicts_with = "target_degree")]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    #[command(flatten)]
    pub run: ExperimentArgs,
}

#[derive(Debug, Args)]
pub struct RepairArgs {
    /// er, tree, cycle, path, complete, star, or fixture:<name>.
    #[arg(long, default_value = "er")]
    pub generator: String,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    /// Mean degree used to calibrate p for er.
    #[arg(long, default_value_t = 3.0)]
    pub target_degree: f64,
    /// Edge probability for er, instead of --target-degree.
    #[arg(long, conflicts_with = "target_degree")]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    #[command(flatten)]
    pub run: ExperimentArgs,
}

#[derive(Debug, Args)]
pub struct CriticalityArgs {
    /// Edge-list file.
    pub graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub delta: u32,
}
