//! Library half of the `liesplit` command: input parsing, the run manifest,
//! the five commands and their reports.

pub mod commands;
pub mod error;
pub mod manifest;
pub mod mm;
pub mod report;

pub use commands::{execute, run};
pub use error::CliError;
pub use manifest::RunManifest;
