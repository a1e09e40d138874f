//! Command-line front end: counting, verification, conjecture checks,
//! generating-function inspection and tree dumps.

pub mod args;
pub mod commands;
pub mod error;
pub mod report;
pub mod verify;

pub use args::Cli;
pub use commands::{run, Output};
pub use error::{CliError, Outcome};
pub use report::{Report, Row, RunManifest};
