use serde::{Deserialize, Serialize};

use crate::bounds::random_position;
use crate::engine::fitness_map;
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;

/// A candidate solution held by one employed bee.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoodSource {
    pub position: Vec<f64>,
    /// Minimization-sense objective.
    pub objective: f64,
    /// `fitness_map(objective)`.
    pub fitness: f64,
    /// Consecutive failed improvement attempts.
    pub trials: u32,
    /// Proposed food-source count, present only under adaptive sizing.
    pub size_gene: Option<f64>,
}

impl FoodSource {
    pub fn new(position: Vec<f64>, objective: f64, size_gene: Option<f64>) -> Result<Self> {
        Ok(Self {
            position,
            objective,
            fitness: fitness_map(objective)?,
            trials: 0,
            size_gene,
        })
    }
}

/// The evolving population plus best-so-far memory and the evaluation
/// counter.
///
/// All objective evaluations made on behalf of a run go through
/// [`Colony::evaluate`], which is the only place `nfe` moves.
#[derive(Debug, Clone, PartialEq)]
pub struct Colony {
    pub(crate) sources: Vec<FoodSource>,
    best_position: Vec<f64>,
    best_objective: f64,
    cycle: u64,
    nfe: u64,
}

impl Colony {
    /// Scatter `n_sources` uniformly over the box and evaluate each. With
    /// `gene_range = Some((lo, hi))` every source also gets a size gene drawn
    /// uniformly from the integers `lo..=hi`.
    pub fn initialize(
        problem: &Problem,
        n_sources: usize,
        gene_range: Option<(usize, usize)>,
        rng: &mut RngStream,
    ) -> Result<Self> {
        if n_sources == 0 {
            return Err(Error::Config(
                "colony needs at least one food source".into(),
            ));
        }
        let mut colony = Colony {
            sources: Vec::with_capacity(n_sources),
            best_position: Vec::new(),
            best_objective: f64::INFINITY,
            cycle: 0,
            nfe: 0,
        };
        for _ in 0..n_sources {
            let position = random_position(problem.bounds(), rng);
            let gene = gene_range.map(|(lo, hi)| fresh_gene(lo, hi, rng));
            colony.add_source(problem, position, gene)?;
        }
        Ok(colony)
    }

    /// Build a colony around already-evaluated sources; `nfe` starts at 0.
    pub fn from_sources(sources: Vec<FoodSource>) -> Result<Self> {
        let best = sources
            .iter()
            .min_by(|a, b| a.objective.total_cmp(&b.objective))
            .ok_or_else(|| Error::Config("colony needs at least one food source".into()))?;
        Ok(Colony {
            best_position: best.position.clone(),
            best_objective: best.objective,
            sources,
            cycle: 0,
            nfe: 0,
        })
    }

    pub fn sources(&self) -> &[FoodSource] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn best_objective(&self) -> f64 {
        self.best_objective
    }

    pub fn cycle(&self) -> u64 {
        self.cycle
    }

    pub fn nfe(&self) -> u64 {
        self.nfe
    }

    /// Minimization-sense objective of `x`; counts one evaluation.
    pub fn evaluate(&mut self, problem: &Problem, x: &[f64]) -> Result<f64> {
        self.nfe += 1;
        let cost = problem.cost(x);
        if cost.is_finite() {
            Ok(cost)
        } else {
            Err(Error::NonFinite(cost))
        }
    }

    /// Evaluate `position` and append it as a new source.
    pub(crate) fn add_source(
        &mut self,
        problem: &Problem,
        position: Vec<f64>,
        size_gene: Option<f64>,
    ) -> Result<()> {
        let cost = self.evaluate(problem, &position)?;
        self.sources
            .push(FoodSource::new(position, cost, size_gene)?);
        self.memorize(self.sources.len() - 1);
        Ok(())
    }

    /// Fold source `i` into the best-so-far memory.
    pub(crate) fn memorize(&mut self, i: usize) {
        let s = &self.sources[i];
        if s.objective < self.best_objective {
            self.best_objective = s.objective;
            self.best_position.clone_from(&s.position);
        }
    }

    pub(crate) fn next_cycle(&mut self) {
        self.cycle += 1;
    }
}

pub(crate) fn fresh_gene(lo: usize, hi: usize, rng: &mut RngStream) -> f64 {
    (lo + rng.uniform_int(hi - lo + 1)) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_benchmark;

    #[test]
    fn initialize_counts_evaluations_and_tracks_best() {
        let p = make_benchmark("sphere", 5).unwrap();
        let mut rng = RngStream::new(1);
        let c = Colony::initialize(&p, 10, Some((10, 100)), &mut rng).unwrap();
        assert_eq!(c.len(), 10);
        assert_eq!(c.nfe(), 10);
        let min = c
            .sources()
            .iter()
            .map(|s| s.objective)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(c.best_objective(), min);
        for s in c.sources() {
            let g = s.size_gene.unwrap();
            assert!((10.0..=100.0).contains(&g) && g.fract() == 0.0);
            assert!(p.bounds().contains(&s.position));
            assert_eq!(s.trials, 0);
        }
    }

    #[test]
    fn non_finite_objective_is_an_error() {
        use crate::bounds::Bounds;
        use crate::problems::Direction;
        let p = Problem::new(
            "nan",
            Bounds::uniform(1, 0.0, 1.0).unwrap(),
            Direction::Minimize,
            |_| f64::NAN,
        );
        let mut rng = RngStream::new(1);
        assert!(matches!(
            Colony::initialize(&p, 4, None, &mut rng),
            Err(Error::NonFinite(_))
        ));
    }
}
