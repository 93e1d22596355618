use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Axis-aligned search box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::Dimension {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::InvalidBounds("dimension must be at least 1".into()));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidBounds(format!(
                    "coordinate {j}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval on every one of `dim` coordinates.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Clamp a single coordinate `j` into its interval.
    #[inline]
    pub fn clamp_coordinate(&self, j: usize, value: f64) -> f64 {
        value.clamp(self.lower[j], self.upper[j])
    }
}

/// Clamp every coordinate onto the violated bound. In-bound coordinates are
/// returned unchanged.
pub fn clamp_to_bounds(position: &[f64], bounds: &Bounds) -> Result<Vec<f64>> {
    if position.len() != bounds.dim() {
        return Err(Error::Dimension {
            expected: bounds.dim(),
            got: position.len(),
        });
    }
    Ok(position
        .iter()
        .enumerate()
        .map(|(j, &v)| bounds.clamp_coordinate(j, v))
        .collect())
}

/// `lower[j] + u[j] * (upper[j] - lower[j])` for given unit draws.
pub fn position_from_unit(bounds: &Bounds, unit: &[f64]) -> Result<Vec<f64>> {
    if unit.len() != bounds.dim() {
        return Err(Error::Dimension {
            expected: bounds.dim(),
            got: unit.len(),
        });
    }
    Ok(unit
        .iter()
        .enumerate()
        .map(|(j, &u)| {
            let lo = bounds.lower[j];
            let hi = bounds.upper[j];
            (lo + u * (hi - lo)).clamp(lo, hi)
        })
        .collect())
}

/// Uniform random point of the box, one draw per coordinate.
pub fn random_position(bounds: &Bounds, rng: &mut RngStream) -> Vec<f64> {
    (0..bounds.dim())
        .map(|j| {
            let lo = bounds.lower[j];
            let hi = bounds.upper[j];
            (lo + rng.unit() * (hi - lo)).clamp(lo, hi)
        })
        .collect()
}
