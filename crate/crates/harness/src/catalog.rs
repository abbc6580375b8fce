//! Running checks over a list of group specs.
//!
//! Entries and the checks inside each entry run on a dedicated rayon pool;
//! results are collected in input order, so the report does not depend on
//! the number of worker threads.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use sstgroups_core::group::{build_from_spec, SpecNode};
use sstgroups_core::{series, BuildConfig, ClassId, GroupAnalysis, GroupSpec, Verdict, Via};

use crate::checks::{run_check, CheckContext, CheckId};
use crate::report::{Outcome, TheoremReport};
use crate::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub build: BuildConfig,
    /// Worker threads; 0 means one per core.
    pub jobs: usize,
    pub checks: Vec<CheckId>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { build: BuildConfig::default(), jobs: 1, checks: CheckId::standard() }
    }
}

/// Class verdicts in canonical class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdicts(pub Vec<(ClassId, Verdict)>);

impl Serialize for ClassVerdicts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (class, verdict) in &self.0 {
            match verdict.as_bool() {
                Some(b) => map.serialize_entry(class.as_str(), &b)?,
                None => map.serialize_entry(class.as_str(), "not_applicable")?,
            }
        }
        map.end()
    }
}

impl ClassVerdicts {
    pub fn get(&self, class: ClassId) -> Option<Verdict> {
        self.0.iter().find(|(c, _)| *c == class).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub pi: Vec<u64>,
    pub class_verdicts: ClassVerdicts,
}

impl GroupSummary {
    pub fn of(name: &str, an: &GroupAnalysis) -> Self {
        GroupSummary {
            name: name.to_string(),
            order: an.group().order(),
            pi: series::pi(an.group()),
            class_verdicts: ClassVerdicts(
                ClassId::ALL
                    .iter()
                    .map(|&c| (c, an.class_verdict(c, Via::Bruteforce).verdict))
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub group: Option<GroupSummary>,
    pub checks: Vec<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EntryReport {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct Tallies {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogReport {
    pub pass: bool,
    pub tallies: Tallies,
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    fn assemble(entries: Vec<EntryReport>) -> Self {
        let mut tallies = Tallies::default();
        for e in &entries {
            if e.error.is_some() {
                tallies.errors += 1;
            }
            for c in &e.checks {
                match c.outcome {
                    Outcome::Pass => tallies.pass += 1,
                    Outcome::Fail => tallies.fail += 1,
                    Outcome::NotApplicable => tallies.not_applicable += 1,
                }
            }
        }
        CatalogReport { pass: entries.iter().all(EntryReport::pass), tallies, entries }
    }

    /// Every report for `id`, across entries.
    pub fn reports_for(&self, id: CheckId) -> impl Iterator<Item = &TheoremReport> + '_ {
        self.entries
            .iter()
            .flat_map(move |e| e.checks.iter().filter(move |c| c.theorem_id == id.as_str()))
    }
}

/// The group and, for a direct product of at least two factors, each factor.
pub struct BuiltEntry {
    pub analysis: Arc<GroupAnalysis>,
    pub factors: Vec<Arc<GroupAnalysis>>,
}

pub fn build_analysis(spec: &GroupSpec, build: &BuildConfig) -> Result<Arc<GroupAnalysis>, HarnessError> {
    let table = build_from_spec(spec, build)?;
    Ok(Arc::new(GroupAnalysis::new(Arc::new(table), build.order_cap)?))
}

pub fn build_entry(spec: &GroupSpec, build: &BuildConfig) -> Result<BuiltEntry, HarnessError> {
    let analysis = build_analysis(spec, build)?;
    let factors = match &spec.node {
        SpecNode::Direct(items) if items.len() >= 2 => items
            .iter()
            .map(|f| build_analysis(f, build))
            .collect::<Result<Vec<_>, _>>()?,
        _ => Vec::new(),
    };
    Ok(BuiltEntry { analysis, factors })
}

/// Runs `checks` on an already built entry.
pub fn run_checks(name: &str, built: &BuiltEntry, checks: &[CheckId]) -> Vec<TheoremReport> {
    let ctx = CheckContext { name, analysis: &built.analysis, factors: &built.factors };
    checks.par_iter().map(|&id| run_check(id, &ctx)).collect()
}

fn panic_message(panic: Box<dyn std::any::Any + Send>) -> String {
    let msg = panic
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "unknown panic".into());
    format!("internal error: {msg}")
}

fn run_entry<T, F>(entry: &CatalogEntry, config: &RunConfig, extra: &F) -> (EntryReport, Option<T>)
where
    F: Fn(&CatalogEntry, &BuiltEntry, &[TheoremReport]) -> T,
{
    let attempt = catch_unwind(AssertUnwindSafe(|| -> Result<(EntryReport, T), HarnessError> {
        let built = build_entry(&entry.spec, &config.build)?;
        let checks = run_checks(&entry.name, &built, &config.checks);
        let more = extra(entry, &built, &checks);
        let report = EntryReport {
            name: entry.name.clone(),
            group: Some(GroupSummary::of(&entry.name, &built.analysis)),
            checks,
            error: None,
        };
        Ok((report, more))
    }));
    let error = match attempt {
        Ok(Ok((report, more))) => return (report, Some(more)),
        Ok(Err(e)) => e.to_string(),
        Err(panic) => panic_message(panic),
    };
    let report = EntryReport { name: entry.name.clone(), group: None, checks: Vec::new(), error: Some(error) };
    (report, None)
}

/// Runs every configured check on every entry. Build failures are recorded
/// on their entry and do not stop the run.
pub fn run_catalog(entries: &[CatalogEntry], config: &RunConfig) -> CatalogReport {
    run_catalog_with(entries, config, |_, _, _| ()).0
}

/// Like [`run_catalog`], also computing `extra` for each entry that builds.
/// `extra` runs on the same pool, after the entry's checks.
pub fn run_catalog_with<T, F>(entries: &[CatalogEntry], config: &RunConfig, extra: F) -> (CatalogReport, Vec<Option<T>>)
where
    T: Send,
    F: Fn(&CatalogEntry, &BuiltEntry, &[TheoremReport]) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    let (reports, extras): (Vec<_>, Vec<_>) =
        pool.install(|| entries.par_iter().map(|e| run_entry(e, config, &extra)).unzip());
    (CatalogReport::assemble(reports), extras)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_manifest_passes() {
        let report = run_catalog(&[], &RunConfig::default());
        assert!(report.pass);
        assert!(report.entries.is_empty());
    }

    #[test]
    fn build_errors_stay_on_their_entry() {
        let entries = vec![
            CatalogEntry { name: "bad".into(), spec: GroupSpec::cyclic(400) },
            CatalogEntry { name: "C4".into(), spec: GroupSpec::cyclic(4) },
        ];
        let config = RunConfig { checks: vec![CheckId::D], ..RunConfig::default() };
        let report = run_catalog(&entries, &config);
        assert!(report.entries[0].error.is_some());
        assert!(report.entries[1].error.is_none());
        assert!(report.entries[1].pass());
        assert_eq!(report.tallies.errors, 1);
        assert!(!report.pass);
    }
}
