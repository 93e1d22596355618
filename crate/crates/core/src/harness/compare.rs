use serde::{Deserialize, Serialize};

use super::ExperimentStats;
use crate::error::{Error, Result};

/// Percentage of evaluations saved by `other` relative to `baseline`:
/// `100 (baseline - other) / baseline`. Positive means `other` is faster.
pub fn acceleration_rate(nfe_baseline: f64, nfe_other: f64) -> Result<f64> {
    if nfe_baseline.is_nan() || nfe_baseline <= 0.0 {
        return Err(Error::ZeroBaseline(nfe_baseline));
    }
    Ok(100.0 * (nfe_baseline - nfe_other) / nfe_baseline)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub problem: String,
    pub dim: usize,
    /// Mean NFE per variant, in [`ComparisonTable::variants`] order.
    pub nfe: Vec<f64>,
    /// Acceleration of the featured variant against each entry of
    /// [`ComparisonTable::others`].
    pub ar: Vec<f64>,
}

/// Mean-NFE comparison of one featured variant against the rest.
///
/// For every other variant `v`, `AR = 100 (NFE_v - NFE_featured) / NFE_v`.
/// A negative AR means the featured variant was slower on that problem;
/// such cells render as `---`. The average row is the plain mean over all
/// problems with negative entries included at their signed value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub baseline: String,
    pub variants: Vec<String>,
    pub others: Vec<String>,
    pub rows: Vec<ComparisonRow>,
    pub average_ar: Vec<f64>,
}

impl ComparisonTable {
    /// `true` where the featured variant needed more evaluations.
    pub fn is_slower(ar: f64) -> bool {
        ar < 0.0
    }

    /// `35.62`, or `---` for a slower featured variant.
    pub fn format_ar(ar: f64) -> String {
        if Self::is_slower(ar) {
            "---".to_string()
        } else {
            format!("{ar:.2}")
        }
    }
}

/// Build the comparison from per-(problem, variant) statistics.
///
/// Every variant must cover exactly the same (problem, dim) set. Problems
/// and variants keep their order of first appearance.
pub fn compare_table(stats: &[ExperimentStats], baseline: &str) -> Result<ComparisonTable> {
    let mut variants: Vec<String> = Vec::new();
    let mut problems: Vec<(String, usize)> = Vec::new();
    for s in stats {
        if !variants.contains(&s.variant) {
            variants.push(s.variant.clone());
        }
        let key = (s.problem.clone(), s.dim);
        if !problems.contains(&key) {
            problems.push(key);
        }
    }
    if !variants.iter().any(|v| v == baseline) {
        return Err(Error::Config(format!(
            "baseline variant `{baseline}` is not among {variants:?}"
        )));
    }
    let others: Vec<String> = variants
        .iter()
        .filter(|v| *v != baseline)
        .cloned()
        .collect();

    let lookup = |problem: &(String, usize), variant: &str| -> Result<f64> {
        let mut hits = stats
            .iter()
            .filter(|s| s.variant == variant && s.problem == problem.0 && s.dim == problem.1);
        match (hits.next(), hits.next()) {
            (Some(s), None) => Ok(s.mean_nfe),
            (None, _) => Err(Error::Config(format!(
                "variant `{variant}` has no result for {} (D = {})",
                problem.0, problem.1
            ))),
            (Some(_), Some(_)) => Err(Error::Config(format!(
                "variant `{variant}` has duplicate results for {} (D = {})",
                problem.0, problem.1
            ))),
        }
    };

    let mut rows = Vec::with_capacity(problems.len());
    for key in &problems {
        let nfe = variants
            .iter()
            .map(|v| lookup(key, v))
            .collect::<Result<Vec<_>>>()?;
        let featured = lookup(key, baseline)?;
        let ar = others
            .iter()
            .map(|v| acceleration_rate(lookup(key, v)?, featured))
            .collect::<Result<Vec<_>>>()?;
        rows.push(ComparisonRow {
            problem: key.0.clone(),
            dim: key.1,
            nfe,
            ar,
        });
    }
    let average_ar = (0..others.len())
        .map(|c| rows.iter().map(|r| r.ar[c]).sum::<f64>() / rows.len() as f64)
        .collect();
    Ok(ComparisonTable {
        baseline: baseline.to_string(),
        variants,
        others,
        rows,
        average_ar,
    })
}
