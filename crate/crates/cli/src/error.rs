use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Input and usage errors. All of them map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{context}: {source}")]
    Validation {
        context: String,
        #[source]
        source: chanent::Error,
    },

    #[error("unknown suite {0:?} (expected prop1, depolarizing, prop2, prop3, prop4, lindblad, minkowski, kernel or all)")]
    UnknownSuite(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Compute(#[from] chanent::Error),

    #[error("serializing the report: {0}")]
    Serialize(serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}
