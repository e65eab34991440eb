//! Command implementations behind the `qdiscord` binary.
//!
//! Each `cmd_*` function does the work of one subcommand, writes its files and
//! returns a report; `main.rs` only parses flags and maps errors to exit codes.

mod example;
mod format;
mod ppt;
mod scan;
mod svg;
mod werner;

use std::path::PathBuf;

use qdiscord::{MeasureError, StateError};

pub use example::{cmd_example, ExampleReport};
pub use format::fmt17;
pub use ppt::{cmd_ppt_count, ppt_histogram, PptArgs, PptReport};
pub use scan::{cmd_scan, scan_records, summarize, ScanArgs, ScanRecord, ScanSummary, CSV_HEADER};
pub use werner::{cmd_werner, werner_rows, WernerArgs, WernerReport, WernerRow};

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_THEOREM_VIOLATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::State(StateError::Io(_)) => EXIT_IO,
            _ => EXIT_VALIDATION,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
