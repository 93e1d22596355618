//! Multi-run experiments: seeded repetitions, descriptive statistics,
//! acceleration rates and convergence series.

mod compare;
mod convergence;
mod format;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{run, TerminationRule, VariantConfig};
use crate::error::{Error, Result};
use crate::problems::Problem;

pub use compare::{acceleration_rate, compare_table, ComparisonRow, ComparisonTable};
pub use convergence::{convergence_export, interpolate_trace, ConvergenceSeries};
pub use format::{format_full, format_sci, ZERO_THRESHOLD};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub nfe: u64,
    /// Best-so-far objective, problem's own sense.
    pub best: f64,
    pub food_sources: usize,
}

/// Outcome of one seeded run. Objective values are in the problem's own
/// sense (maximized values stay positive).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub seed: u64,
    pub best_objective: f64,
    /// Integral coordinates already rounded.
    pub best_position: Vec<f64>,
    pub nfe: u64,
    pub cycles: u64,
    pub reached_target: bool,
    /// One point after initialization and one per cycle; the last point is
    /// `(nfe, best_objective)`.
    pub trace: Vec<TracePoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SdConvention {
    /// Divide by `n`.
    #[default]
    Population,
    /// Divide by `n - 1`.
    Sample,
}

/// Aggregate over the runs of one (problem, variant) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub problem: String,
    pub variant: String,
    pub dim: usize,
    pub runs: usize,
    pub best: f64,
    pub mean: f64,
    pub sd: f64,
    pub mean_nfe: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub stats: ExperimentStats,
    /// Indexed by run, seeds `base_seed + i`.
    pub results: Vec<RunResult>,
}

/// Run `runs` independent seeds `base_seed, base_seed + 1, ...` on the
/// current rayon pool and summarize them (population SD).
///
/// Results are collected by run index, so the outcome does not depend on
/// scheduling.
pub fn run_experiment(
    problem: &Problem,
    config: &VariantConfig,
    termination: &TerminationRule,
    runs: usize,
    base_seed: u64,
) -> Result<Experiment> {
    if runs == 0 {
        return Err(Error::Config("an experiment needs at least one run".into()));
    }
    let results = (0..runs)
        .into_par_iter()
        .map(|i| {
            run(
                problem,
                config,
                termination,
                base_seed.wrapping_add(i as u64),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let stats = summarize(
        problem,
        config.strategy.name(),
        &results,
        SdConvention::Population,
    )?;
    Ok(Experiment { stats, results })
}

/// Best, mean, standard deviation and mean NFE of a set of runs.
///
/// "Best" is the minimum in minimization sense, i.e. the maximum for
/// maximization problems. Mean and SD use a single streaming pass.
pub fn summarize(
    problem: &Problem,
    variant: &str,
    results: &[RunResult],
    sd: SdConvention,
) -> Result<ExperimentStats> {
    if results.is_empty() {
        return Err(Error::Config("cannot summarize zero runs".into()));
    }
    let mut best = f64::INFINITY;
    let (mut mean, mut m2) = (0.0, 0.0);
    let mut nfe_mean = 0.0;
    for (k, r) in results.iter().enumerate() {
        let cost = problem.to_cost(r.best_objective);
        best = best.min(cost);
        let n = (k + 1) as f64;
        let delta = cost - mean;
        mean += delta / n;
        m2 += delta * (cost - mean);
        nfe_mean += (r.nfe as f64 - nfe_mean) / n;
    }
    let n = results.len() as f64;
    let var = match sd {
        SdConvention::Population => m2 / n,
        SdConvention::Sample if results.len() > 1 => m2 / (n - 1.0),
        SdConvention::Sample => 0.0,
    };
    Ok(ExperimentStats {
        problem: problem.name().to_string(),
        variant: variant.to_string(),
        dim: problem.dim(),
        runs: results.len(),
        best: problem.to_user(best),
        mean: problem.to_user(mean),
        sd: var.max(0.0).sqrt(),
        mean_nfe: nfe_mean,
    })
}
