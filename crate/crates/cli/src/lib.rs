//! Structure-constant files and the batch verifier behind the `superpair` binary.
//!
//! Objects are stored as JSON with sparse tensors written as index tuples
//! ending in a scalar string. [`format`] reads and writes them, [`output`]
//! turns core reports into stable JSON or text, and [`commands`] implements
//! the subcommands.

pub mod commands;
pub mod format;
pub mod output;

pub use commands::{run, Cli, Outcome};
pub use format::{canonical_json, load_object, parse_object, Loaded, ObjectFile};

/// Exit code for a run where every required property holds.
pub const EXIT_PASS: i32 = 0;
/// Exit code when some property fails; the report carries witnesses.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 2;

/// Environment variable naming the field used by files without a `field` block.
pub const FIELD_ENV: &str = "SUPERPAIR_FIELD";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error(transparent)]
    Core(#[from] superpair::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub(crate) fn schema(location: impl Into<String>, message: impl Into<String>) -> CliError {
        CliError::Schema { location: location.into(), message: message.into() }
    }
}
