//! Objective functions and the name-addressable problem registry.
//!
//! Every [`Problem`] exposes two views of its objective: [`Problem::evaluate`]
//! in the caller's own sense (maximize or minimize), and [`Problem::cost`],
//! the minimization-sense value the optimizer works with.

mod benchmarks;
mod engineering;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::error::{Error, Result};

pub use benchmarks::{ackley, griewank, make_benchmark, rastrigin, schaffer, sphere, BENCHMARKS};
pub use engineering::{
    gas_compressor, gas_production, gear_train, lennard_jones_energy, make_air_heater,
    make_air_heater_with, make_gas_compressor, make_gas_production, make_gear_train,
    make_lennard_jones, AirHeaterRoughness, LjConfig, LjPotential, F1_DEGENERATE_EPS,
    LJ_OVERLAP_PENALTY,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Minimize,
    Maximize,
}

pub type Objective = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// An objective over a bounded box.
///
/// Immutable once built and cheap to clone; runs share it freely.
#[derive(Clone)]
pub struct Problem {
    name: String,
    bounds: Bounds,
    direction: Direction,
    integrality: Vec<bool>,
    known_optimum: Option<f64>,
    objective: Objective,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("direction", &self.direction)
            .field("known_optimum", &self.known_optimum)
            .finish_non_exhaustive()
    }
}

impl Problem {
    pub fn new<F>(
        name: impl Into<String>,
        bounds: Bounds,
        direction: Direction,
        objective: F,
    ) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let dim = bounds.dim();
        Self {
            name: name.into(),
            bounds,
            direction,
            integrality: vec![false; dim],
            known_optimum: None,
            objective: Arc::new(objective),
        }
    }

    /// Mark coordinates that are rounded to the nearest integer (half away
    /// from zero) before every evaluation.
    pub fn with_integrality(mut self, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: mask.len(),
            });
        }
        self.integrality = mask;
        Ok(self)
    }

    /// Known optimal value, minimization sense. Enables the accuracy stop.
    pub fn with_known_optimum(mut self, value: f64) -> Self {
        self.known_optimum = Some(value);
        self
    }

    /// Replace the objective, keeping name, box, sense and mask. Used to
    /// wrap an objective with instrumentation.
    pub fn map_objective<F>(&self, wrap: impl FnOnce(Objective) -> F) -> Problem
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let mut out = self.clone();
        out.objective = Arc::new(wrap(self.objective.clone()));
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn integrality(&self) -> &[bool] {
        &self.integrality
    }

    pub fn known_optimum(&self) -> Option<f64> {
        self.known_optimum
    }

    /// Apply the integrality mask.
    pub fn snap(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.integrality)
            .map(|(&v, &int)| if int { v.round() } else { v })
            .collect()
    }

    /// Objective value in the problem's own sense.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        if self.integrality.iter().any(|&b| b) {
            (self.objective)(&self.snap(x))
        } else {
            (self.objective)(x)
        }
    }

    /// Minimization-sense value: the objective, negated for maximization.
    pub fn cost(&self, x: &[f64]) -> f64 {
        self.to_cost(self.evaluate(x))
    }

    pub fn to_cost(&self, value: f64) -> f64 {
        match self.direction {
            Direction::Minimize => value,
            Direction::Maximize => -value,
        }
    }

    /// Inverse of [`Problem::to_cost`] (the map is an involution).
    pub fn to_user(&self, cost: f64) -> f64 {
        self.to_cost(cost)
    }
}

/// Every name [`by_name`] accepts.
pub const PROBLEM_NAMES: [&str; 10] = [
    "sphere",
    "griewank",
    "ackley",
    "rastrigin",
    "schaffer",
    "gas_production",
    "air_heater",
    "gear_train",
    "lennard_jones",
    "gas_compressor",
];

/// Size parameters for registry lookups. `dim` applies to the scalable
/// benchmarks, `atoms` to Lennard-Jones; fixed-size problems reject a
/// conflicting `dim`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ProblemParams {
    pub dim: Option<usize>,
    pub atoms: Option<usize>,
}

/// Default dimension when none is given: 30 for the scalable benchmarks,
/// 2 for Schaffer.
pub fn default_dim(name: &str) -> usize {
    if name == "schaffer" {
        2
    } else {
        30
    }
}

pub fn by_name(name: &str, params: ProblemParams) -> Result<Problem> {
    let fixed = |p: Problem| -> Result<Problem> {
        match params.dim {
            Some(d) if d != p.dim() => Err(Error::Config(format!(
                "{name} has fixed dimension {}, got --dim {d}",
                p.dim()
            ))),
            _ => Ok(p),
        }
    };
    match name {
        n if BENCHMARKS.contains(&n) => {
            make_benchmark(n, params.dim.unwrap_or_else(|| default_dim(n)))
        }
        "gas_production" => fixed(make_gas_production()),
        "air_heater" => fixed(make_air_heater()),
        "gear_train" => fixed(make_gear_train()),
        "gas_compressor" => fixed(make_gas_compressor()),
        "lennard_jones" => {
            let atoms = match (params.atoms, params.dim) {
                (Some(n), _) => n,
                (None, Some(d)) if d % 3 == 0 => d / 3,
                (None, Some(d)) => {
                    return Err(Error::Config(format!(
                        "lennard_jones dimension must be a multiple of 3, got {d}"
                    )))
                }
                (None, None) => 2,
            };
            let p = make_lennard_jones(LjConfig::new(atoms)?);
            fixed(p)
        }
        other => Err(Error::UnknownProblem(other.to_string())),
    }
}
