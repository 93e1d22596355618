use crate::colony::{Colony, FoodSource};
use crate::error::{Error, Result};

/// Map a minimization objective to a positive fitness:
/// `1 / (1 + f)` for `f >= 0`, `1 + |f|` otherwise.
pub fn fitness_map(objective: f64) -> Result<f64> {
    if !objective.is_finite() {
        return Err(Error::NonFinite(objective));
    }
    Ok(if objective >= 0.0 {
        1.0 / (1.0 + objective)
    } else {
        1.0 + objective.abs()
    })
}

/// Fitness-proportional probabilities `fit_i / sum(fit)`.
pub fn probabilities_from_fitness(fitness: &[f64]) -> Vec<f64> {
    let total: f64 = fitness.iter().sum();
    fitness.iter().map(|f| f / total).collect()
}

pub fn selection_probabilities(colony: &Colony) -> Vec<f64> {
    let fit: Vec<f64> = colony.sources().iter().map(|s| s.fitness).collect();
    probabilities_from_fitness(&fit)
}

/// Keep the candidate when it is at least as good as the incumbent.
///
/// "At least as good" is decided on the raw minimization objective. The
/// fitness map is strictly decreasing, so this is the same order as comparing
/// fitness, but it keeps resolution once `1 / (1 + f)` rounds to 1.
/// Returns `true` if the candidate replaced the incumbent.
pub fn greedy_update(slot: &mut FoodSource, candidate: FoodSource) -> bool {
    if candidate.objective <= slot.objective {
        *slot = FoodSource {
            trials: 0,
            ..candidate
        };
        true
    } else {
        slot.trials += 1;
        false
    }
}

/// Value-returning form of [`greedy_update`].
pub fn greedy_select(current: FoodSource, candidate: FoodSource) -> FoodSource {
    let mut slot = current;
    greedy_update(&mut slot, candidate);
    slot
}
