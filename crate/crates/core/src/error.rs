use thiserror::Error;

/// Errors raised by the optimizer, the problem registry and the harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown variant `{0}`")]
    UnknownVariant(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("non-finite objective value {0}")]
    NonFinite(f64),

    #[error("{strategy} needs at least {needed} food sources, colony has {have}")]
    ColonyTooSmall {
        strategy: &'static str,
        needed: usize,
        have: usize,
    },

    #[error("acceleration rate is undefined for baseline NFE {0}")]
    ZeroBaseline(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
