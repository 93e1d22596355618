//! Artificial Bee Colony optimization with adaptive colony sizing.
//!
//! The crate provides the classic employed/onlooker/scout loop with five
//! candidate-generation variants ([`Strategy`]), a set of benchmark and
//! engineering design problems, and an experiment harness that aggregates
//! seeded multi-run statistics.
//!
//! ```
//! use beehive::{make_benchmark, run, Strategy, TerminationRule, VariantConfig};
//!
//! let sphere = make_benchmark("sphere", 5)?;
//! let config = VariantConfig::new(Strategy::Sac1);
//! let stop = TerminationRule::for_problem(&sphere).with_max_nfe(20_000);
//! let result = run(&sphere, &config, &stop, 42)?;
//! assert!(result.best_objective < 1e-6);
//! # Ok::<(), beehive::Error>(())
//! ```

pub mod bounds;
pub mod colony;
pub mod engine;
pub mod error;
pub mod harness;
pub mod problems;
pub mod rng;

pub use bounds::{clamp_to_bounds, random_position, Bounds};
pub use colony::{Colony, FoodSource};
pub use engine::{run, Strategy, TerminationRule, VariantConfig};
pub use error::{Error, Result};
pub use harness::{run_experiment, ExperimentStats, RunResult};
pub use problems::{by_name, make_benchmark, Direction, Problem, ProblemParams};
pub use rng::RngStream;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/colony.md")]
    mod colony {}
    #[doc = include_str!("../../../book/src/strategies.md")]
    mod strategies {}
    #[doc = include_str!("../../../book/src/adaptive.md")]
    mod adaptive {}
    #[doc = include_str!("../../../book/src/problems.md")]
    mod problems {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
