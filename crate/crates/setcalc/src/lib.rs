//! Instance files, reports and batch running for `setcalc-core`.
//!
//! The `setcalc` binary is a thin wrapper over this crate.

pub mod instance;
pub mod report;
pub mod run;

use std::path::{Path, PathBuf};

pub use instance::{parse_instance, serialize_instance, CheckSpec, Instance, ParseError, ParseErrorKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
    Parse(Vec<ParseError>),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(setcalc_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl From<setcalc_core::Error> for CliError {
    fn from(e: setcalc_core::Error) -> Self {
        CliError::Domain(e)
    }
}

pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_instance(&text).map_err(CliError::Parse)
}
