use super::{TerminationRule, VariantConfig};
use crate::bounds::random_position;
use crate::colony::{fresh_gene, Colony};
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;

/// Next food-source count from the mean size gene: round half up, bump odd
/// counts to the next even number, then clamp to `[sn_min, sn_max]`.
pub fn target_food_count(mean_gene: f64, sn_min: usize, sn_max: usize) -> usize {
    let rounded = (mean_gene + 0.5).floor().max(0.0) as usize;
    let even = rounded + rounded % 2;
    even.clamp(sn_min, sn_max)
}

/// Resize the colony to the count its size genes vote for.
///
/// Growth adds uniformly random sources with fresh genes (one evaluation
/// each, capped by the remaining budget so the count stays even). Shrinking
/// drops the sources with the worst objective.
pub fn adapt_colony_size(
    colony: &mut Colony,
    config: &VariantConfig,
    problem: &Problem,
    stop: &TerminationRule,
    rng: &mut RngStream,
) -> Result<()> {
    let genes: Option<Vec<f64>> = colony.sources().iter().map(|s| s.size_gene).collect();
    let genes = genes
        .ok_or_else(|| Error::Config("adaptive sizing needs a size gene on every source".into()))?;
    let mean = genes.iter().sum::<f64>() / genes.len() as f64;
    let target = target_food_count(mean, config.sn_min, config.sn_max);
    let n = colony.len();

    if target > n {
        let remaining = stop.max_nfe.saturating_sub(colony.nfe());
        let mut add = (target - n) as u64;
        if add > remaining {
            add = remaining - remaining % 2;
        }
        for _ in 0..add {
            let position = random_position(problem.bounds(), rng);
            let gene = fresh_gene(config.sn_min, config.sn_max, rng);
            colony.add_source(problem, position, Some(gene))?;
        }
    } else if target < n {
        let mut order: Vec<usize> = (0..n).collect();
        // worst first; among equals the later index goes first
        order.sort_by(|&a, &b| {
            let (fa, fb) = (colony.sources[a].objective, colony.sources[b].objective);
            fb.total_cmp(&fa).then(b.cmp(&a))
        });
        let mut drop = vec![false; n];
        for &i in &order[..n - target] {
            drop[i] = true;
        }
        let mut k = 0;
        colony.sources.retain(|_| {
            let keep = !drop[k];
            k += 1;
            keep
        });
    }
    Ok(())
}
