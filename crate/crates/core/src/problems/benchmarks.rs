//! Scalable test functions. Each has its minimum 0 at the origin.

use std::f64::consts::{E, PI};

use super::{Direction, Problem};
use crate::bounds::Bounds;
use crate::error::{Error, Result};

pub const BENCHMARKS: [&str; 5] = ["sphere", "griewank", "ackley", "rastrigin", "schaffer"];

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    // grouped so that both brackets vanish exactly at the origin
    20.0 * (1.0 - (-0.2 * sq.sqrt()).exp()) + (E - cos.exp())
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

/// Generalized Schaffer F6 over the squared radius.
pub fn schaffer(x: &[f64]) -> f64 {
    let r2: f64 = x.iter().map(|v| v * v).sum();
    let s = r2.sqrt().sin();
    let d = 1.0 + 0.001 * r2;
    0.5 + (s * s - 0.5) / (d * d)
}

/// Build one of [`BENCHMARKS`] on its standard box.
pub fn make_benchmark(name: &str, dim: usize) -> Result<Problem> {
    if dim == 0 {
        return Err(Error::Config(format!(
            "{name}: dimension must be at least 1"
        )));
    }
    let (half_width, f): (f64, fn(&[f64]) -> f64) = match name {
        "sphere" => (5.12, sphere),
        "griewank" => (600.0, griewank),
        "ackley" => (32.0, ackley),
        "rastrigin" => (5.12, rastrigin),
        "schaffer" => (100.0, schaffer),
        other => return Err(Error::UnknownProblem(other.to_string())),
    };
    let bounds = Bounds::uniform(dim, -half_width, half_width)?;
    Ok(Problem::new(name, bounds, Direction::Minimize, f).with_known_optimum(0.0))
}
