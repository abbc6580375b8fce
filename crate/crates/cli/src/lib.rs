//! File formats, the built-in catalog and the `sstgroups` command line.

pub mod app;
pub mod expect;
pub mod manifest;
pub mod report;
pub mod spec_json;

pub use app::{run, run_manifest};
pub use manifest::{parse_manifest, standard_catalog, Manifest, ManifestEntry, ManifestError};
pub use spec_json::{parse_group_spec, parse_spec_file, serialize_group_spec, SpecError, SpecFile};
