//! Expected verdicts attached to spec files and manifest entries.
//!
//! Keys:
//! - `D`, `T1_1`, ...: the check passes;
//! - `SST`, `BT`, ...: brute-force class verdict of the group;
//! - `SST(G1)`: class verdict of the direct factor named `G1`;
//! - `ss_permutable(<y, w>)` or `nss(A4)`: predicate verdict in the group for
//!   the subgroup generated by the words, or a named subject;
//! - `nilpotent_residual(<x>)`: the nilpotent residual equals the subgroup.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use sstgroups_core::{ClassId, ElementWord, GroupAnalysis, PredicateId, SubgroupId};
use sstgroups_harness::{CheckId, TheoremReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Named(String),
    Words(Vec<ElementWord>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectKey {
    Check(CheckId),
    Class(ClassId),
    FactorClass { class: ClassId, factor: String },
    Predicate { pred: PredicateId, subject: Subject },
    Residual(Subject),
}

impl ExpectKey {
    pub fn parse(key: &str) -> Result<Self, String> {
        let key = key.trim();
        if let Some((head, rest)) = key.split_once('(') {
            let arg = rest
                .strip_suffix(')')
                .ok_or_else(|| format!("`{key}`: missing closing parenthesis"))?
                .trim();
            let head = head.trim();
            if head == "nilpotent_residual" {
                return Ok(ExpectKey::Residual(parse_subject(arg)?));
            }
            if let Ok(pred) = head.parse::<PredicateId>() {
                return Ok(ExpectKey::Predicate { pred, subject: parse_subject(arg)? });
            }
            if let Ok(class) = head.parse::<ClassId>() {
                return Ok(ExpectKey::FactorClass { class, factor: arg.to_string() });
            }
            return Err(format!("`{key}`: unknown predicate or class `{head}`"));
        }
        if let Some(id) = CheckId::ALL.into_iter().find(|c| c.as_str() == key) {
            return Ok(ExpectKey::Check(id));
        }
        key.parse::<ClassId>()
            .map(ExpectKey::Class)
            .map_err(|_| format!("`{key}`: not a check id or class"))
    }
}

fn parse_subject(arg: &str) -> Result<Subject, String> {
    if let Some(inner) = arg.strip_prefix('<').and_then(|a| a.strip_suffix('>')) {
        return parse_words(inner).map(Subject::Words);
    }
    if arg.contains(',') || arg.contains('^') || arg.contains(' ') {
        return parse_words(arg).map(Subject::Words);
    }
    Ok(Subject::Named(arg.to_string()))
}

pub fn parse_words(s: &str) -> Result<Vec<ElementWord>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|e: sstgroups_core::GroupError| e.to_string()))
        .collect()
}

/// What an expectation may look at.
pub struct EvalContext<'a> {
    pub analysis: &'a GroupAnalysis,
    /// Direct factors with their display names.
    pub factors: &'a [(String, Arc<GroupAnalysis>)],
    pub subjects: &'a BTreeMap<String, Vec<ElementWord>>,
    pub checks: &'a [TheoremReport],
}

impl EvalContext<'_> {
    /// Subject as a lattice id. Bare names that are not declared subjects
    /// are read as a single generator word.
    pub fn resolve(&self, subject: &Subject) -> Result<SubgroupId, String> {
        let words = match subject {
            Subject::Words(w) => w.clone(),
            Subject::Named(name) => match self.subjects.get(name) {
                Some(w) => w.clone(),
                None => parse_words(name)?,
            },
        };
        let g = self.analysis.group();
        let elems = words
            .iter()
            .map(|w| w.evaluate(g).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.analysis.lattice().id_generated_by(elems))
    }

    pub fn evaluate(&self, key: &ExpectKey) -> Result<bool, String> {
        let an = self.analysis;
        match key {
            ExpectKey::Check(id) => self
                .checks
                .iter()
                .find(|c| c.theorem_id == id.as_str())
                .map(|c| c.pass)
                .ok_or_else(|| format!("check {id} was not run")),
            ExpectKey::Class(class) => an
                .class_verdict(*class, sstgroups_core::Via::Bruteforce)
                .verdict
                .as_bool()
                .ok_or_else(|| format!("{class} has no verdict")),
            ExpectKey::FactorClass { class, factor } => {
                let (_, f) = self
                    .factors
                    .iter()
                    .find(|(name, _)| name == factor)
                    .ok_or_else(|| format!("no direct factor named `{factor}`"))?;
                Ok(f.class_holds(*class))
            }
            ExpectKey::Predicate { pred, subject } => Ok(an.holds_in_group(*pred, self.resolve(subject)?)),
            ExpectKey::Residual(subject) => Ok(an.nilpotent_residual() == self.resolve(subject)?),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ExpectationResult {
    pub key: String,
    pub expected: bool,
    pub actual: Option<bool>,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Evaluates `expected` in key order. Keys naming a check outside `selected`
/// are skipped.
pub fn evaluate_all(ctx: &EvalContext<'_>, expected: &BTreeMap<String, bool>, selected: &[CheckId]) -> Vec<ExpectationResult> {
    expected
        .iter()
        .filter_map(|(key, &want)| {
            let parsed = ExpectKey::parse(key);
            if let Ok(ExpectKey::Check(id)) = parsed {
                if !selected.contains(&id) {
                    return None;
                }
            }
            let actual = parsed.and_then(|k| ctx.evaluate(&k));
            Some(match actual {
                Ok(got) => ExpectationResult { key: key.clone(), expected: want, actual: Some(got), matches: got == want, error: None },
                Err(e) => ExpectationResult { key: key.clone(), expected: want, actual: None, matches: false, error: Some(e) },
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_forms() {
        assert_eq!(ExpectKey::parse("D").unwrap(), ExpectKey::Check(CheckId::D));
        assert_eq!(ExpectKey::parse("SST").unwrap(), ExpectKey::Class(ClassId::SST));
        assert_eq!(
            ExpectKey::parse("SST(G1)").unwrap(),
            ExpectKey::FactorClass { class: ClassId::SST, factor: "G1".into() }
        );
        match ExpectKey::parse("ss_permutable(<y, w>)").unwrap() {
            ExpectKey::Predicate { pred, subject: Subject::Words(w) } => {
                assert_eq!(pred, PredicateId::SsPermutable);
                assert_eq!(w.len(), 2);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            ExpectKey::parse("nss(A4)").unwrap(),
            ExpectKey::Predicate { pred: PredicateId::NssPermutable, subject: Subject::Named("A4".into()) }
        );
        assert!(ExpectKey::parse("nonsense").is_err());
        assert!(ExpectKey::parse("frobnicate(<x>)").is_err());
    }
}
