use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] scenemem_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Log { line: usize, message: String },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("malformed position frame at t={t}: {message}")]
    Frame { t: u64, message: String },

    #[error("invalid memory file: {0}")]
    Memory(String),

    #[error(
        "stored edge {child} -> {parent} does not match recomputation ({stored} vs {computed})"
    )]
    EdgeMismatch {
        child: u64,
        parent: u64,
        stored: f64,
        computed: f64,
    },

    #[error("log is empty")]
    EmptyLog,

    #[error("timestamps must be strictly increasing ({previous} then {next})")]
    NonMonotonicTimestamp { previous: u64, next: u64 },

    #[error("scene {step} (t={t}) failed: {message}")]
    SceneFailed {
        step: usize,
        t: u64,
        message: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 for bad input, 2 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
