//! Catalog manifests and the built-in standard catalog.
//!
//! ```json
//! {"config": {"cap": 360, "jobs": 0, "checks": ["all"]},
//!  "entries": [{"name": "Ex1_5", "spec": "Ex1_5.json", "expected": {"SST": false}},
//!              {"name": "C6", "spec": {"kind": "cyclic", "n": 6}}]}
//! ```
//!
//! `spec` is a path relative to the manifest, or an inline spec object.
//! Expectations from the spec file and the entry are merged; a key given in
//! both must agree.

use std::collections::BTreeSet;
use std::path::Path;

use serde_json::Value;
use sstgroups_harness::{CatalogEntry, CheckId};
use thiserror::Error;

use crate::expect::ExpectKey;
use crate::spec_json::{expected_map, parse_json_text, spec_file_from_value, SpecError, SpecFile};

#[derive(Error, Debug)]
pub enum ManifestError {
    #[error("{context}: {source}")]
    Spec { context: String, source: SpecError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("duplicate entry name `{0}`")]
    DuplicateName(String),
    #[error("entry `{entry}`: expectation `{key}`: {message}")]
    BadExpectation { entry: String, key: String, message: String },
    #[error("invalid manifest at {context}: {message}")]
    Invalid { context: String, message: String },
}

fn invalid(context: &str, message: impl Into<String>) -> ManifestError {
    ManifestError::Invalid { context: context.to_string(), message: message.into() }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ManifestConfig {
    pub cap: Option<usize>,
    pub jobs: Option<usize>,
    pub checks: Option<Vec<CheckId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    pub file: SpecFile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub config: ManifestConfig,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn catalog_entries(&self) -> Vec<CatalogEntry> {
        self.entries
            .iter()
            .map(|e| CatalogEntry { name: e.name.clone(), spec: e.file.spec.clone() })
            .collect()
    }

    pub fn entry(&self, name: &str) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Checks selected by the manifest, or every check.
    pub fn selected_checks(&self) -> Vec<CheckId> {
        self.config.checks.clone().unwrap_or_else(|| CheckId::ALL.to_vec())
    }
}

/// Whether `v` looks like a manifest rather than a single spec.
pub fn is_manifest(v: &Value) -> bool {
    v.get("entries").is_some() && v.get("kind").is_none()
}

pub fn parse_manifest(text: &str, load: &dyn Fn(&str) -> Result<String, ManifestError>) -> Result<Manifest, ManifestError> {
    let v = parse_json_text(text).map_err(|source| ManifestError::Spec { context: "manifest".into(), source })?;
    manifest_from_value(&v, load)
}

pub fn manifest_from_value(v: &Value, load: &dyn Fn(&str) -> Result<String, ManifestError>) -> Result<Manifest, ManifestError> {
    let obj = v.as_object().ok_or_else(|| invalid("$", "expected an object"))?;
    for key in obj.keys() {
        if key != "config" && key != "entries" {
            return Err(invalid(&format!("$.{key}"), "unknown field"));
        }
    }
    let config = match obj.get("config") {
        None => ManifestConfig::default(),
        Some(c) => parse_config(c)?,
    };
    let items = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("$.entries", "expected a list"))?;
    let mut names = BTreeSet::new();
    let mut entries = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let path = format!("$.entries[{i}]");
        let entry = parse_entry(item, &path, load)?;
        if !names.insert(entry.name.clone()) {
            return Err(ManifestError::DuplicateName(entry.name));
        }
        entries.push(entry);
    }
    let manifest = Manifest { config, entries };
    validate_expectations(&manifest)?;
    Ok(manifest)
}

fn parse_config(v: &Value) -> Result<ManifestConfig, ManifestError> {
    let obj = v.as_object().ok_or_else(|| invalid("$.config", "expected an object"))?;
    let mut config = ManifestConfig::default();
    for (key, value) in obj {
        let path = format!("$.config.{key}");
        let number = || {
            value
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| invalid(&path, "expected a non-negative integer"))
        };
        match key.as_str() {
            "cap" => config.cap = Some(number()?),
            "jobs" => config.jobs = Some(number()?),
            "checks" => {
                let list: Vec<&str> = value
                    .as_array()
                    .and_then(|a| a.iter().map(Value::as_str).collect())
                    .ok_or_else(|| invalid(&path, "expected a list of check ids"))?;
                let ids = CheckId::parse_list(&list.join(",")).map_err(|e| invalid(&path, e.to_string()))?;
                config.checks = Some(ids);
            }
            _ => return Err(invalid(&path, "unknown field")),
        }
    }
    Ok(config)
}

fn parse_entry(v: &Value, path: &str, load: &dyn Fn(&str) -> Result<String, ManifestError>) -> Result<ManifestEntry, ManifestError> {
    let obj = v.as_object().ok_or_else(|| invalid(path, "expected an object"))?;
    for key in obj.keys() {
        if !["name", "spec", "expected"].contains(&key.as_str()) {
            return Err(invalid(&format!("{path}.{key}"), "unknown field"));
        }
    }
    let spec_value = obj.get("spec").ok_or_else(|| invalid(path, "missing field `spec`"))?;
    let (context, mut file) = match spec_value {
        Value::String(p) => {
            let text = load(p)?;
            let file = parse_json_text(&text)
                .and_then(|v| spec_file_from_value(&v))
                .map_err(|source| ManifestError::Spec { context: p.clone(), source })?;
            (p.clone(), file)
        }
        inline => {
            let file = spec_file_from_value(inline)
                .map_err(|source| ManifestError::Spec { context: format!("{path}.spec"), source })?;
            (format!("{path}.spec"), file)
        }
    };
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(invalid(&format!("{path}.name"), "expected a string")),
        None => file.spec.display_name(),
    };
    if let Some(expected) = obj.get("expected") {
        let extra = expected_map(expected, &format!("{path}.expected"))
            .map_err(|source| ManifestError::Spec { context: context.clone(), source })?;
        for (key, value) in extra {
            if let Some(&old) = file.expected.get(&key) {
                if old != value {
                    return Err(ManifestError::BadExpectation {
                        entry: name,
                        key,
                        message: "spec file and manifest disagree".into(),
                    });
                }
            }
            file.expected.insert(key, value);
        }
    }
    Ok(ManifestEntry { name, file })
}

fn validate_expectations(m: &Manifest) -> Result<(), ManifestError> {
    let selected = m.selected_checks();
    for e in &m.entries {
        for key in e.file.expected.keys() {
            let bad = |message: String| ManifestError::BadExpectation { entry: e.name.clone(), key: key.clone(), message };
            match ExpectKey::parse(key).map_err(bad)? {
                ExpectKey::Check(id) if !selected.contains(&id) => {
                    return Err(bad(format!("check {id} is not in the selection")));
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Loads `spec` paths relative to `dir`.
pub fn file_loader(dir: &Path) -> impl Fn(&str) -> Result<String, ManifestError> + '_ {
    move |p: &str| {
        let path = dir.join(p);
        std::fs::read_to_string(&path).map_err(|e| ManifestError::Io { path: path.display().to_string(), message: e.to_string() })
    }
}

macro_rules! catalog_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../catalog/", $name)))),*]
    };
}

/// Spec files shipped with the standard catalog.
pub const CATALOG_FILES: &[(&str, &str)] = catalog_files!(
    "Ex1_2.json",
    "Ex1_3.json",
    "Ex1_5.json",
    "Ex1_8.json",
    "Ex1_8_G1.json",
    "Ex1_8_G2.json",
    "D8.json",
    "Q8.json",
    "D10.json",
    "D12.json",
    "S3.json",
    "S4.json",
    "A4.json",
    "S5.json",
    "A5.json",
    "C3_C4.json",
    "C7_C3.json",
    "S3xC35.json",
    "S3xD10.json",
);

pub const STANDARD_MANIFEST: &str = include_str!("../catalog/manifest.json");

pub fn embedded_file(name: &str) -> Option<&'static str> {
    CATALOG_FILES.iter().find(|(n, _)| *n == name).map(|&(_, text)| text)
}

pub fn standard_catalog() -> Manifest {
    let load = |p: &str| {
        embedded_file(p)
            .map(str::to_string)
            .ok_or_else(|| ManifestError::Io { path: p.to_string(), message: "not in the standard catalog".into() })
    };
    parse_manifest(STANDARD_MANIFEST, &load).expect("standard catalog is valid")
}
