//! Command-line front end for `unram-core`: problem files, per-form reports,
//! the oracle and projective-model checks, and the resumable orbit scanner.

pub mod commands;
pub mod error;
pub mod problem;
pub mod scan;

pub use error::{CliError, CliResult, EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
pub use problem::ProblemFile;
