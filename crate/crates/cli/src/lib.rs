//! Library side of the `beehive` binary: argument types, experiment specs,
//! and the CSV/JSON writers and readers.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod settings;

pub use error::{CliError, CliResult};
