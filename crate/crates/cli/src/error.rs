use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cap(_) => EXIT_CAP,
            CliError::Input(_) | CliError::Io { .. } => EXIT_INPUT,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Wraps a core error with a short description of what was being done.
    pub fn core(context: &str, e: unram_core::Error) -> Self {
        match e {
            unram_core::Error::CapExceeded(msg) => CliError::Cap(format!("{context}: {msg}")),
            other => CliError::Input(format!("{context}: {other}")),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
