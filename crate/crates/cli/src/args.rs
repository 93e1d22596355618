use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "beehive",
    version,
    about = "Run and compare bee colony optimizers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one variant on one problem and write its statistics.
    Run(RunArgs),
    /// Run several variants over a problem list and tabulate acceleration rates.
    Compare(CompareArgs),
    /// Run a whole suite with default settings.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Benchmarks,
    Engineering,
    All,
}

/// Settings shared by `run` and `compare`. Unset flags fall back to the
/// config file, then to the defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct ExperimentArgs {
    /// Independent runs per experiment [default: 30]
    #[arg(long)]
    pub runs: Option<usize>,
    /// Base seed; run i uses seed + i [default: 1]
    #[arg(long, env = "BEEHIVE_SEED")]
    pub seed: Option<u64>,
    /// Colony size (twice the initial food-source count) [default: 100]
    #[arg(long)]
    pub colony: Option<usize>,
    /// Abandonment limit [default: 100]
    #[arg(long)]
    pub limit: Option<u32>,
    /// C of the global-local and gbest moves [default: 1.5]
    #[arg(long)]
    pub c_factor: Option<f64>,
    /// Evaluation budget per run [default: 1000000]
    #[arg(long)]
    pub max_nfe: Option<u64>,
    /// Stop once |best - optimum| falls below this [default: 1e-20]
    #[arg(long)]
    pub accuracy: Option<f64>,
    /// Force adaptive colony sizing on or off
    #[arg(long)]
    pub adaptive: Option<bool>,
    /// Lower food-source bound under adaptive sizing [default: 10]
    #[arg(long)]
    pub sn_min: Option<usize>,
    /// Upper food-source bound under adaptive sizing [default: 100]
    #[arg(long)]
    pub sn_max: Option<usize>,
    /// Report the sample (n - 1) standard deviation
    #[arg(long)]
    pub sample_sd: bool,
    /// Worker threads for parallel runs
    #[arg(long)]
    pub jobs: Option<usize>,
    /// TOML file with any of the above keys (flags win)
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub problem: Option<String>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Atom count for lennard_jones
    #[arg(long)]
    pub atoms: Option<usize>,
    #[arg(long)]
    pub variant: Option<String>,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Statistics file; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for one trace file per run
    #[arg(long)]
    pub traces_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    /// Problems as `name` or `name:dim`
    #[arg(long, value_delimiter = ',', required = true)]
    pub problems: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "basic,sac,sac1,sac2")]
    pub variants: Vec<String>,
    /// Variant whose speed-up over the others is tabulated
    #[arg(long, default_value = "sac2")]
    pub baseline: String,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Comparison file; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the per-experiment statistics here
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    /// Override the suite budget (1000000 for benchmarks, 240000 for engineering)
    #[arg(long)]
    pub max_nfe: Option<u64>,
    #[arg(long, env = "BEEHIVE_SEED", default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value = "bench-out")]
    pub out_dir: PathBuf,
    #[arg(long)]
    pub jobs: Option<usize>,
}
