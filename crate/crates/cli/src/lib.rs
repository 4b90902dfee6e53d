//! Command-line interface and experiment harness for the diffusion graph
//! distances in `graphdiff-core`: single-pair distance queries with JSON
//! output, and reproducible CSV experiments (triplet census, lineage table,
//! convergence sweep, product-bound sweep, assignment-work baseline).

use std::fmt;

pub mod csv;
pub mod experiments;

/// CLI-level errors, split by exit code: input that could not be read or
/// parsed (exit 2) versus structurally valid requests that ask for something
/// impossible (exit 3).
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Parse(String),
    /// Invalid flag combination or an operation the inputs do not support.
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) | CliError::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}
