use serde::{Deserialize, Serialize};

use super::{RunResult, TracePoint};
use crate::error::{Error, Result};

/// Median best-so-far curve over runs, sampled on a shared NFE grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSeries {
    pub nfe: Vec<f64>,
    pub median: Vec<f64>,
}

/// Linear interpolation of a trace at `nfe`, held constant outside it.
pub fn interpolate_trace(trace: &[TracePoint], nfe: f64) -> f64 {
    let first = &trace[0];
    if nfe <= first.nfe as f64 {
        return first.best;
    }
    for w in trace.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let (xa, xb) = (a.nfe as f64, b.nfe as f64);
        if nfe <= xb {
            if xb == xa {
                return b.best;
            }
            let t = (nfe - xa) / (xb - xa);
            return a.best + t * (b.best - a.best);
        }
    }
    trace[trace.len() - 1].best
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// Resample every run's trace onto `grid_points` evenly spaced NFE values
/// between the earliest start and the latest end, and take the pointwise
/// median.
pub fn convergence_export(results: &[RunResult], grid_points: usize) -> Result<ConvergenceSeries> {
    if results.is_empty() || results.iter().any(|r| r.trace.is_empty()) {
        return Err(Error::Config(
            "convergence export needs non-empty traces".into(),
        ));
    }
    if grid_points == 0 {
        return Err(Error::Config(
            "convergence grid needs at least one point".into(),
        ));
    }
    let start = results.iter().map(|r| r.trace[0].nfe).min().unwrap_or(0) as f64;
    let end = results
        .iter()
        .map(|r| r.trace[r.trace.len() - 1].nfe)
        .max()
        .unwrap_or(0) as f64;
    let grid: Vec<f64> = if grid_points == 1 || end <= start {
        vec![start]
    } else {
        let step = (end - start) / (grid_points - 1) as f64;
        (0..grid_points).map(|i| start + step * i as f64).collect()
    };
    let mut column = vec![0.0; results.len()];
    let median = grid
        .iter()
        .map(|&x| {
            for (slot, r) in column.iter_mut().zip(results) {
                *slot = interpolate_trace(&r.trace, x);
            }
            median(&mut column)
        })
        .collect();
    Ok(ConvergenceSeries { nfe: grid, median })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(trace: Vec<(u64, f64)>) -> RunResult {
        let last = *trace.last().unwrap();
        RunResult {
            seed: 0,
            best_objective: last.1,
            best_position: vec![],
            nfe: last.0,
            cycles: trace.len() as u64,
            reached_target: false,
            trace: trace
                .into_iter()
                .map(|(nfe, best)| TracePoint {
                    nfe,
                    best,
                    food_sources: 4,
                })
                .collect(),
        }
    }

    #[test]
    fn single_run_resamples_itself() {
        let r = run_with(vec![(0, 10.0), (100, 4.0), (200, 1.0)]);
        let s = convergence_export(&[r], 5).unwrap();
        assert_eq!(s.nfe, vec![0.0, 50.0, 100.0, 150.0, 200.0]);
        assert_eq!(s.median, vec![10.0, 7.0, 4.0, 2.5, 1.0]);
    }

    #[test]
    fn flat_traces_give_flat_series() {
        let r = run_with(vec![(10, 3.0), (60, 3.0), (110, 3.0)]);
        let s = convergence_export(&[r.clone(), r], 7).unwrap();
        assert!(s.median.iter().all(|&m| m == 3.0));
    }

    #[test]
    fn pointwise_median_of_two_lines() {
        let line = |offset: f64| {
            run_with(
                (0..=10)
                    .map(|i| (i * 100, offset - (i * 100) as f64 / 100.0))
                    .collect(),
            )
        };
        let s = convergence_export(&[line(10.0), line(20.0)], 21).unwrap();
        for (x, m) in s.nfe.iter().zip(&s.median) {
            assert!((m - (15.0 - x / 100.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn shorter_runs_hold_their_last_value() {
        let a = run_with(vec![(0, 5.0), (100, 1.0)]);
        let b = run_with(vec![(0, 5.0), (300, 2.0)]);
        let c = run_with(vec![(0, 5.0), (300, 0.0)]);
        let s = convergence_export(&[a, b, c], 4).unwrap();
        assert_eq!(s.nfe, vec![0.0, 100.0, 200.0, 300.0]);
        assert_eq!(s.median[3], 1.0);
    }

    #[test]
    fn rejects_empty_input() {
        assert!(convergence_export(&[], 5).is_err());
    }
}
