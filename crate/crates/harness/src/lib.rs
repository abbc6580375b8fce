//! Executable checks of subgroup-permutability results over single groups
//! and whole catalogs, with structured pass/fail reports.

pub mod catalog;
pub mod checks;
pub mod report;

use sstgroups_core::GroupError;
use thiserror::Error;

pub use catalog::{build_entry, run_catalog, run_catalog_with, run_checks, BuiltEntry, CatalogEntry, CatalogReport, EntryReport, GroupSummary, RunConfig};
pub use checks::{registry, run_check, CheckContext, CheckId, CheckRegistry, TheoremCheck};
pub use report::{Outcome, ReportBuilder, StatementValue, TheoremReport};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Build(#[from] GroupError),
}
