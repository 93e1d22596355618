//! The bee colony loop.
//!
//! A run initializes `initial_colony / 2` food sources, then repeats
//! employed, onlooker and scout phases (plus colony resizing for the
//! adaptive variants) until the termination rule is met. All internal
//! comparisons are in minimization sense; [`run`] converts its result back
//! to the problem's own sense.

mod adapt;
mod phases;
mod selection;
mod strategy;

use serde::{Deserialize, Serialize};

use crate::colony::Colony;
use crate::error::{Error, Result};
use crate::harness::{RunResult, TracePoint};
use crate::problems::Problem;
use crate::rng::RngStream;

pub use adapt::{adapt_colony_size, target_food_count};
pub use phases::{employed_phase, onlooker_phase, scout_phase};
pub use selection::{
    fitness_map, greedy_select, greedy_update, probabilities_from_fitness, selection_probabilities,
};
pub use strategy::{
    apply_move, candidate_basic, candidate_elitist, candidate_gbest, candidate_global_local,
    elitist_coordinate, gbest_coordinate, global_local_coordinate, moved_coordinate,
    neighbor_coordinate, propose, Move, MoveRule, Strategy,
};

/// Algorithm variant and its control parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantConfig {
    pub strategy: Strategy,
    /// Failed trials a source may accumulate before a scout replaces it.
    pub limit: u32,
    /// `C` of the global-local move and the upper end of the gbest weight.
    pub c_factor: f64,
    pub adaptive_sizing: bool,
    /// Number of bees; half of them are employed, one per food source.
    pub initial_colony: usize,
    /// Food-source count bounds under adaptive sizing.
    pub sn_min: usize,
    pub sn_max: usize,
}

impl VariantConfig {
    /// Colony 100, limit 100, `C = 1.5`, food sources in `[10, 100]`,
    /// adaptive sizing for the SAC family.
    pub fn new(strategy: Strategy) -> Self {
        Self {
            strategy,
            limit: 100,
            c_factor: 1.5,
            adaptive_sizing: strategy.adaptive_by_default(),
            initial_colony: 100,
            sn_min: 10,
            sn_max: 100,
        }
    }

    pub fn food_sources(&self) -> usize {
        self.initial_colony / 2
    }

    pub fn validate(&self) -> Result<()> {
        let sn = self.food_sources();
        if !self.initial_colony.is_multiple_of(2) || !sn.is_multiple_of(2) || sn < 4 {
            return Err(Error::Config(format!(
                "colony size must be a multiple of 4 and at least 8 (even food-source count >= 4), got {}",
                self.initial_colony
            )));
        }
        if self.limit == 0 {
            return Err(Error::Config("limit must be positive".into()));
        }
        if !(self.c_factor.is_finite() && self.c_factor >= 0.0) {
            return Err(Error::Config(format!(
                "C must be finite and >= 0, got {}",
                self.c_factor
            )));
        }
        if self.adaptive_sizing {
            if self.sn_min < 4
                || !self.sn_min.is_multiple_of(2)
                || !self.sn_max.is_multiple_of(2)
                || self.sn_min > self.sn_max
            {
                return Err(Error::Config(format!(
                    "food-source bounds must be even with 4 <= min <= max, got [{}, {}]",
                    self.sn_min, self.sn_max
                )));
            }
            if !(self.sn_min..=self.sn_max).contains(&sn) {
                return Err(Error::Config(format!(
                    "initial food sources {sn} outside [{}, {}]",
                    self.sn_min, self.sn_max
                )));
            }
        }
        Ok(())
    }
}

/// When a run stops: at the evaluation budget, or once the best value is
/// within `accuracy` of `target`.
///
/// The budget is a hard cap: no phase starts an evaluation once `max_nfe`
/// have been spent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TerminationRule {
    pub max_nfe: u64,
    pub accuracy: f64,
    /// Minimization-sense target value.
    pub target: Option<f64>,
}

impl Default for TerminationRule {
    fn default() -> Self {
        Self {
            max_nfe: 1_000_000,
            accuracy: 1e-20,
            target: None,
        }
    }
}

impl TerminationRule {
    pub fn new(max_nfe: u64) -> Self {
        Self {
            max_nfe,
            ..Self::default()
        }
    }

    /// Defaults with the problem's known optimum (if any) as target.
    pub fn for_problem(problem: &Problem) -> Self {
        Self {
            target: problem.known_optimum(),
            ..Self::default()
        }
    }

    pub fn with_max_nfe(mut self, max_nfe: u64) -> Self {
        self.max_nfe = max_nfe;
        self
    }

    pub fn with_accuracy(mut self, accuracy: f64) -> Self {
        self.accuracy = accuracy;
        self
    }

    pub fn with_target(mut self, target: Option<f64>) -> Self {
        self.target = target;
        self
    }

    pub fn target_reached(&self, best_cost: f64) -> bool {
        self.target
            .is_some_and(|t| (best_cost - t).abs() < self.accuracy)
    }

    pub fn is_met(&self, colony: &Colony) -> bool {
        colony.nfe() >= self.max_nfe || self.target_reached(colony.best_objective())
    }
}

/// Run one seeded optimization.
pub fn run(
    problem: &Problem,
    config: &VariantConfig,
    termination: &TerminationRule,
    seed: u64,
) -> Result<RunResult> {
    config.validate()?;
    let sn = config.food_sources();
    let needed = config.strategy.rule().min_sources();
    if sn < needed {
        return Err(Error::ColonyTooSmall {
            strategy: config.strategy.name(),
            needed,
            have: sn,
        });
    }
    if termination.max_nfe < sn as u64 {
        return Err(Error::Config(format!(
            "budget of {} evaluations cannot initialize {sn} food sources",
            termination.max_nfe
        )));
    }

    let mut rng = RngStream::new(seed);
    let genes = config
        .adaptive_sizing
        .then_some((config.sn_min, config.sn_max));
    let mut colony = Colony::initialize(problem, sn, genes, &mut rng)?;
    let mut trace = vec![trace_point(problem, &colony)];

    while !termination.is_met(&colony) {
        employed_phase(&mut colony, config, problem, termination, &mut rng)?;
        onlooker_phase(&mut colony, config, problem, termination, &mut rng)?;
        scout_phase(&mut colony, config, problem, termination, &mut rng)?;
        if config.adaptive_sizing && !termination.is_met(&colony) {
            adapt_colony_size(&mut colony, config, problem, termination, &mut rng)?;
        }
        colony.next_cycle();
        trace.push(trace_point(problem, &colony));
    }

    Ok(RunResult {
        seed,
        best_objective: problem.to_user(colony.best_objective()),
        best_position: problem.snap(colony.best_position()),
        nfe: colony.nfe(),
        cycles: colony.cycle(),
        reached_target: termination.target_reached(colony.best_objective()),
        trace,
    })
}

fn trace_point(problem: &Problem, colony: &Colony) -> TracePoint {
    TracePoint {
        nfe: colony.nfe(),
        best: problem.to_user(colony.best_objective()),
        food_sources: colony.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::problems::{make_benchmark, Direction};

    #[test]
    fn defaults() {
        let c = VariantConfig::new(Strategy::Sac2);
        assert_eq!((c.limit, c.c_factor, c.initial_colony), (100, 1.5, 100));
        assert!(c.adaptive_sizing);
        assert!(!VariantConfig::new(Strategy::Basic).adaptive_sizing);
        assert!(!VariantConfig::new(Strategy::Gbest).adaptive_sizing);
        let t = TerminationRule::default();
        assert_eq!((t.max_nfe, t.accuracy), (1_000_000, 1e-20));
    }

    #[test]
    fn validation() {
        let ok = VariantConfig::new(Strategy::Sac);
        assert!(ok.validate().is_ok());
        for bad in [
            VariantConfig {
                initial_colony: 10,
                ..ok.clone()
            },
            VariantConfig {
                initial_colony: 4,
                ..ok.clone()
            },
            VariantConfig {
                limit: 0,
                ..ok.clone()
            },
            VariantConfig {
                c_factor: f64::NAN,
                ..ok.clone()
            },
            VariantConfig {
                sn_min: 3,
                ..ok.clone()
            },
            VariantConfig {
                sn_min: 60,
                ..ok.clone()
            },
        ] {
            assert!(bad.validate().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn constant_objective_runs_to_budget() {
        let p = Problem::new(
            "seven",
            Bounds::uniform(3, -1.0, 1.0).unwrap(),
            Direction::Minimize,
            |_| 7.0,
        );
        let t = TerminationRule::new(5_000);
        let r = run(&p, &VariantConfig::new(Strategy::Basic), &t, 1).unwrap();
        assert_eq!(r.best_objective, 7.0);
        assert!(r.trace.iter().all(|tp| tp.best == 7.0));
        assert_eq!(r.nfe, 5_000);
    }

    #[test]
    fn basic_and_sac_without_sizing_coincide() {
        let p = make_benchmark("rastrigin", 5).unwrap();
        let t = TerminationRule::for_problem(&p).with_max_nfe(20_000);
        let basic = run(&p, &VariantConfig::new(Strategy::Basic), &t, 77).unwrap();
        let sac = VariantConfig {
            adaptive_sizing: false,
            ..VariantConfig::new(Strategy::Sac)
        };
        assert_eq!(run(&p, &sac, &t, 77).unwrap(), basic);
    }

    #[test]
    fn stops_on_target() {
        let p = make_benchmark("sphere", 2).unwrap();
        let t = TerminationRule::for_problem(&p).with_accuracy(1e-6);
        let r = run(&p, &VariantConfig::new(Strategy::Sac1), &t, 3).unwrap();
        assert!(r.reached_target);
        assert!(r.best_objective < 1e-6);
        assert!(r.nfe < t.max_nfe);
        let last = r.trace.last().unwrap();
        assert_eq!((last.nfe, last.best), (r.nfe, r.best_objective));
    }

    #[test]
    fn maximization_reports_user_sense() {
        let p = Problem::new(
            "hill",
            Bounds::uniform(2, -2.0, 2.0).unwrap(),
            Direction::Maximize,
            |x| 3.0 - x[0] * x[0] - x[1] * x[1],
        );
        let r = run(
            &p,
            &VariantConfig::new(Strategy::Basic),
            &TerminationRule::new(20_000),
            5,
        )
        .unwrap();
        assert!((r.best_objective - 3.0).abs() < 1e-6);
        assert!(r.trace.windows(2).all(|w| w[1].best >= w[0].best));
    }

    #[test]
    fn budget_too_small_for_initialization() {
        let p = make_benchmark("sphere", 2).unwrap();
        assert!(run(
            &p,
            &VariantConfig::new(Strategy::Basic),
            &TerminationRule::new(10),
            0
        )
        .is_err());
    }
}
