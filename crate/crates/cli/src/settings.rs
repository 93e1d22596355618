//! Fully resolved experiment settings.

use std::path::Path;

use beehive::harness::SdConvention;
use beehive::{by_name, Problem, ProblemParams, Strategy, TerminationRule, VariantConfig};
use serde::Deserialize;

use crate::args::ExperimentArgs;
use crate::error::{CliError, CliResult};

pub const DEFAULT_RUNS: usize = 30;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_MAX_NFE: u64 = 1_000_000;

/// Keys accepted in a `--config` file. Every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub dim: Option<usize>,
    pub atoms: Option<usize>,
    pub variant: Option<String>,
    pub runs: Option<usize>,
    pub seed: Option<u64>,
    pub colony: Option<usize>,
    pub limit: Option<u32>,
    pub c_factor: Option<f64>,
    pub max_nfe: Option<u64>,
    pub accuracy: Option<f64>,
    pub adaptive: Option<bool>,
    pub sn_min: Option<usize>,
    pub sn_max: Option<usize>,
    pub sample_sd: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e.message())))
    }
}

/// Problem-independent settings of an experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub runs: usize,
    pub seed: u64,
    pub colony: Option<usize>,
    pub limit: Option<u32>,
    pub c_factor: Option<f64>,
    pub max_nfe: u64,
    pub accuracy: Option<f64>,
    pub adaptive: Option<bool>,
    pub sn_min: Option<usize>,
    pub sn_max: Option<usize>,
    pub sd: SdConvention,
}

impl Settings {
    /// Merge flags over the file over the defaults.
    pub fn resolve(args: &ExperimentArgs, file: &FileConfig) -> CliResult<Self> {
        let runs = args.runs.or(file.runs).unwrap_or(DEFAULT_RUNS);
        if runs == 0 {
            return Err(CliError::Usage("--runs must be at least 1".into()));
        }
        let max_nfe = args.max_nfe.or(file.max_nfe).unwrap_or(DEFAULT_MAX_NFE);
        if max_nfe == 0 {
            return Err(CliError::Usage("--max-nfe must be positive".into()));
        }
        let accuracy = args.accuracy.or(file.accuracy);
        if matches!(accuracy, Some(a) if a.is_nan() || a <= 0.0) {
            return Err(CliError::Usage("--accuracy must be positive".into()));
        }
        let sample = args.sample_sd || file.sample_sd.unwrap_or(false);
        Ok(Self {
            runs,
            seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            colony: args.colony.or(file.colony),
            limit: args.limit.or(file.limit),
            c_factor: args.c_factor.or(file.c_factor),
            max_nfe,
            accuracy,
            adaptive: args.adaptive.or(file.adaptive),
            sn_min: args.sn_min.or(file.sn_min),
            sn_max: args.sn_max.or(file.sn_max),
            sd: if sample {
                SdConvention::Sample
            } else {
                SdConvention::Population
            },
        })
    }

    pub fn variant_config(&self, strategy: Strategy) -> CliResult<VariantConfig> {
        let mut c = VariantConfig::new(strategy);
        if let Some(v) = self.colony {
            c.initial_colony = v;
        }
        if let Some(v) = self.limit {
            c.limit = v;
        }
        if let Some(v) = self.c_factor {
            c.c_factor = v;
        }
        if let Some(v) = self.adaptive {
            c.adaptive_sizing = v;
        }
        if let Some(v) = self.sn_min {
            c.sn_min = v;
        }
        if let Some(v) = self.sn_max {
            c.sn_max = v;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn termination(&self, problem: &Problem) -> TerminationRule {
        let mut t = TerminationRule::for_problem(problem).with_max_nfe(self.max_nfe);
        if let Some(a) = self.accuracy {
            t = t.with_accuracy(a);
        }
        t
    }
}

/// A problem reference such as `sphere`, `sphere:60` or `lennard_jones:3`
/// (the number is the atom count for Lennard-Jones).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemRef {
    pub name: String,
    pub dim: Option<usize>,
    pub atoms: Option<usize>,
}

impl ProblemRef {
    pub fn parse(text: &str) -> CliResult<Self> {
        let (name, size) = match text.split_once(':') {
            Some((n, s)) => {
                let v = s
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad size in problem `{text}`")))?;
                (n, Some(v))
            }
            None => (text, None),
        };
        let name = name.trim().to_string();
        if name == "lennard_jones" {
            Ok(Self {
                name,
                dim: None,
                atoms: size,
            })
        } else {
            Ok(Self {
                name,
                dim: size,
                atoms: None,
            })
        }
    }

    pub fn build(&self) -> CliResult<Problem> {
        Ok(by_name(
            &self.name,
            ProblemParams {
                dim: self.dim,
                atoms: self.atoms,
            },
        )?)
    }
}

pub fn parse_variant(text: &str) -> CliResult<Strategy> {
    Ok(text.trim().parse::<Strategy>()?)
}
