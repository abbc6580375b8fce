//! JSON reports. Field order is fixed by struct declaration order and all
//! maps are ordered, so identical inputs give identical bytes.

use serde::Serialize;
use sstgroups_core::{series, ClassId, GroupAnalysis, PredicateVerdict, Refutation, Via};
use sstgroups_harness::catalog::Tallies;
use sstgroups_harness::report::{CounterexampleRecord, SubgroupRecord};
use sstgroups_harness::{CatalogReport, EntryReport, GroupSummary, TheoremReport};

use crate::expect::ExpectationResult;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A counterexample lifted out of its check.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FlatCounterexample {
    pub theorem_id: String,
    #[serde(flatten)]
    pub record: CounterexampleRecord,
}

pub fn flatten_counterexamples(checks: &[TheoremReport]) -> Vec<FlatCounterexample> {
    checks
        .iter()
        .flat_map(|c| {
            c.counterexamples
                .iter()
                .map(|r| FlatCounterexample { theorem_id: c.theorem_id.clone(), record: r.clone() })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PredicateReport {
    pub predicate: String,
    pub subgroup: SubgroupRecord,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SubgroupRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<String>,
}

impl PredicateReport {
    pub fn of(an: &GroupAnalysis, v: &PredicateVerdict) -> Self {
        let l = an.lattice();
        let refutation = v.refutation.map(|r| match r {
            Refutation::Subgroup(s) => format!("subgroup of order {} {:?}", l.order(s), l.set(s).to_vec()),
            Refutation::SupplementSylow { supplement, sylow } => format!(
                "least supplement of order {} has a Sylow subgroup of order {} that does not permute",
                l.order(supplement),
                l.order(sylow)
            ),
            Refutation::Element(e) => format!("element {e}"),
        });
        PredicateReport {
            predicate: v.predicate.as_str().to_string(),
            subgroup: SubgroupRecord::of(l, v.subject),
            verdict: v.verdict,
            witness: v.witness.map(|w| SubgroupRecord::of(l, w)),
            refutation,
        }
    }
}

/// Class verdicts by both routes.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassRow {
    pub class: &'static str,
    pub bruteforce: Option<bool>,
    pub characterization: Option<bool>,
}

pub fn class_rows(an: &GroupAnalysis) -> Vec<ClassRow> {
    ClassId::ALL
        .iter()
        .map(|&c| ClassRow {
            class: c.as_str(),
            bruteforce: an.class_verdict(c, Via::Bruteforce).verdict.as_bool(),
            characterization: an.class_verdict(c, Via::Characterization).verdict.as_bool(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Structure {
    pub subgroups: usize,
    pub conjugacy_classes: usize,
    pub normal_subgroups: usize,
    pub derived_series: Vec<usize>,
    pub chief_factors: Vec<usize>,
    pub fitting: usize,
    pub nilpotent_residual: usize,
    pub frattini: usize,
    pub sylow_counts: Vec<(u64, usize)>,
}

impl Structure {
    pub fn of(an: &GroupAnalysis) -> Self {
        let l = an.lattice();
        let g = an.group();
        Structure {
            subgroups: l.len(),
            conjugacy_classes: l.conjugacy_classes().len(),
            normal_subgroups: l.normal_subgroups().len(),
            derived_series: series::derived_series(g).terms.iter().map(|t| t.len()).collect(),
            chief_factors: series::chief_factor_orders(l),
            fitting: l.order(series::fitting(l)),
            nilpotent_residual: l.order(an.nilpotent_residual()),
            frattini: series::frattini(l).len(),
            sylow_counts: l.sylows_in(l.whole()).iter().map(|(p, s)| (*p, s.len())).collect(),
        }
    }
}

/// Report for one group.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GroupReport {
    pub tool_version: &'static str,
    pub group: GroupSummary,
    pub checks: Vec<TheoremReport>,
    pub counterexamples: Vec<FlatCounterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expectations: Vec<ExpectationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<Structure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<PredicateReport>,
}

impl GroupReport {
    pub fn new(name: &str, an: &GroupAnalysis, checks: Vec<TheoremReport>) -> Self {
        GroupReport {
            tool_version: TOOL_VERSION,
            group: GroupSummary::of(name, an),
            counterexamples: flatten_counterexamples(&checks),
            checks,
            expectations: Vec::new(),
            classes: None,
            structure: None,
            predicate: None,
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.expectations.iter().all(|e| e.matches)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogEntryJson {
    pub name: String,
    pub pass: bool,
    pub group: Option<GroupSummary>,
    pub checks: Vec<TheoremReport>,
    pub counterexamples: Vec<FlatCounterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expectations: Vec<ExpectationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogJson {
    pub tool_version: &'static str,
    pub pass: bool,
    pub tallies: Tallies,
    pub mismatches: usize,
    pub entries: Vec<CatalogEntryJson>,
}

impl CatalogJson {
    pub fn new(report: CatalogReport, expectations: Vec<Vec<ExpectationResult>>) -> Self {
        let entries: Vec<CatalogEntryJson> = report
            .entries
            .into_iter()
            .zip(expectations)
            .map(|(e, exp): (EntryReport, _)| CatalogEntryJson {
                name: e.name.clone(),
                pass: e.pass() && exp.iter().all(|x: &ExpectationResult| x.matches),
                group: e.group,
                counterexamples: flatten_counterexamples(&e.checks),
                checks: e.checks,
                expectations: exp,
                error: e.error,
            })
            .collect();
        let mismatches = entries.iter().flat_map(|e| &e.expectations).filter(|x| !x.matches).count();
        CatalogJson {
            tool_version: TOOL_VERSION,
            pass: entries.iter().all(|e| e.pass),
            tallies: report.tallies,
            mismatches,
            entries,
        }
    }

    pub fn has_errors(&self) -> bool {
        self.entries.iter().any(|e| e.error.is_some())
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
