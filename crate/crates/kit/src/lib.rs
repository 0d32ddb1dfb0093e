//! Front end for `congruence-core`: JSON input formats, catalog tokens,
//! reports and the `congruence-kit` commands.
//!
//! Every command returns a [`Report`](report::Report). Its exit status is
//! `0` when no claim failed and `1` otherwise; errors that stop a command
//! before it produces a report map to exit status `2`.

pub mod checks;
pub mod commands;
pub mod formats;
pub mod input;
pub mod report;

use std::path::PathBuf;

use congruence_core::burnside::BurnsideError;
use congruence_core::cup::FormError;
use congruence_core::link::LinkError;
use congruence_core::surgery::SurgeryError;
use congruence_core::zmod::ZmodError;

/// Environment variable that overrides the default search budget.
pub const BUDGET_ENV: &str = "CONGRUENCE_KIT_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum KitError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },
    #[error("{source_name}: {message}")]
    Format { source_name: String, message: String },
    #[error("cannot read {path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error("invalid presentation: {0}")]
    Surgery(#[from] SurgeryError),
    #[error("invalid diagram: {0}")]
    Link(#[from] LinkError),
    #[error("{0}")]
    Form(#[from] FormError),
    #[error("{0}")]
    Burnside(#[from] BurnsideError),
    #[error("{0}")]
    Zmod(#[from] ZmodError),
}

impl KitError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T, E = KitError> = std::result::Result<T, E>;
