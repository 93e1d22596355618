//! One cycle is employed -> onlooker -> scout, optionally followed by
//! [`adapt_colony_size`](super::adapt_colony_size).
//!
//! Every phase checks the termination rule before each evaluation and
//! returns early once it is met.

use super::selection::{greedy_update, selection_probabilities};
use super::strategy::propose;
use super::{TerminationRule, VariantConfig};
use crate::bounds::random_position;
use crate::colony::{fresh_gene, Colony, FoodSource};
use crate::error::Result;
use crate::problems::Problem;
use crate::rng::RngStream;

/// Generate, evaluate and greedily accept one candidate around source `i`.
fn exploit(
    colony: &mut Colony,
    i: usize,
    config: &VariantConfig,
    problem: &Problem,
    rng: &mut RngStream,
) -> Result<()> {
    let (position, mv) = propose(
        config.strategy.rule(),
        i,
        colony,
        problem.bounds(),
        config.c_factor,
        rng,
    )?;
    // The size gene follows its parent, perturbed with the same phi against
    // the partner's gene.
    let gene = colony.sources[i].size_gene.map(|g| {
        let other = colony.sources[mv.partner].size_gene.unwrap_or(g);
        (g + mv.phi * (g - other)).clamp(config.sn_min as f64, config.sn_max as f64)
    });
    let cost = colony.evaluate(problem, &position)?;
    let candidate = FoodSource::new(position, cost, gene)?;
    if greedy_update(&mut colony.sources[i], candidate) {
        colony.memorize(i);
    }
    Ok(())
}

/// Each employed bee proposes one candidate for its own source, in order.
pub fn employed_phase(
    colony: &mut Colony,
    config: &VariantConfig,
    problem: &Problem,
    stop: &TerminationRule,
    rng: &mut RngStream,
) -> Result<()> {
    for i in 0..colony.len() {
        if stop.is_met(colony) {
            break;
        }
        exploit(colony, i, config, problem, rng)?;
    }
    Ok(())
}

/// Place exactly as many onlookers as there are sources.
///
/// A roving index cycles over the sources; at source `i` a uniform draw
/// below `p_i` places an onlooker there. Probabilities are fixed for the
/// whole phase.
pub fn onlooker_phase(
    colony: &mut Colony,
    config: &VariantConfig,
    problem: &Problem,
    stop: &TerminationRule,
    rng: &mut RngStream,
) -> Result<()> {
    let probs = selection_probabilities(colony);
    let n = colony.len();
    let mut placed = 0;
    let mut i = 0;
    while placed < n {
        if stop.is_met(colony) {
            break;
        }
        if rng.unit() < probs[i] {
            exploit(colony, i, config, problem, rng)?;
            placed += 1;
        }
        i = (i + 1) % n;
    }
    Ok(())
}

/// Replace at most one exhausted source: the one with the most trials,
/// provided its count exceeds `limit`. Best-so-far memory is kept.
pub fn scout_phase(
    colony: &mut Colony,
    config: &VariantConfig,
    problem: &Problem,
    stop: &TerminationRule,
    rng: &mut RngStream,
) -> Result<()> {
    if stop.is_met(colony) {
        return Ok(());
    }
    let Some((idx, trials)) = colony
        .sources()
        .iter()
        .map(|s| s.trials)
        .enumerate()
        // first index wins ties
        .fold(None, |acc: Option<(usize, u32)>, (i, t)| match acc {
            Some((_, best)) if best >= t => acc,
            _ => Some((i, t)),
        })
    else {
        return Ok(());
    };
    if trials <= config.limit {
        return Ok(());
    }
    let position = random_position(problem.bounds(), rng);
    let gene = colony.sources[idx]
        .size_gene
        .map(|_| fresh_gene(config.sn_min, config.sn_max, rng));
    let cost = colony.evaluate(problem, &position)?;
    colony.sources[idx] = FoodSource::new(position, cost, gene)?;
    colony.memorize(idx);
    Ok(())
}
