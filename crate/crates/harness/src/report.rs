use serde::{Serialize, Serializer};
use sstgroups_core::{SubgroupId, SubgroupLattice, Verdict};

/// A statement's value: a boolean, or not applicable when its own
/// hypothesis fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementValue {
    Bool(bool),
    NotApplicable,
}

impl StatementValue {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            StatementValue::Bool(b) => Some(b),
            StatementValue::NotApplicable => None,
        }
    }
}

impl From<bool> for StatementValue {
    fn from(b: bool) -> Self {
        StatementValue::Bool(b)
    }
}

impl From<Verdict> for StatementValue {
    fn from(v: Verdict) -> Self {
        match v.as_bool() {
            Some(b) => StatementValue::Bool(b),
            None => StatementValue::NotApplicable,
        }
    }
}

impl Serialize for StatementValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            StatementValue::Bool(b) => s.serialize_bool(*b),
            StatementValue::NotApplicable => s.serialize_str("not_applicable"),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Statement {
    pub label: String,
    pub value: StatementValue,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

/// A subgroup as its order plus sorted element ids in the group's table.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub order: usize,
    pub elements: Vec<usize>,
}

impl SubgroupRecord {
    pub fn of(l: &SubgroupLattice, i: SubgroupId) -> Self {
        SubgroupRecord { order: l.order(i), elements: l.set(i).to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CounterexampleRecord {
    pub description: String,
    pub subgroups: Vec<SubgroupRecord>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub group_name: String,
    pub outcome: Outcome,
    pub pass: bool,
    pub statements: Vec<Statement>,
    pub counterexamples: Vec<CounterexampleRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// How the statements of a report must relate for the check to pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// All applicable statements agree.
    Equivalent,
    /// Every applicable statement is true.
    AllTrue,
    /// Statements come in (antecedent, consequent) pairs.
    Implications,
    /// Statements come in pairs that must agree.
    Biconditionals,
}

#[derive(Debug, Clone)]
pub struct ReportBuilder {
    id: String,
    group: String,
    statements: Vec<Statement>,
    counterexamples: Vec<CounterexampleRecord>,
    /// Failing instances kept back unless the check fails.
    evidence: Vec<CounterexampleRecord>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(id: &str, group: &str) -> Self {
        ReportBuilder {
            id: id.to_string(),
            group: group.to_string(),
            statements: Vec::new(),
            counterexamples: Vec::new(),
            evidence: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn statement(&mut self, label: &str, value: impl Into<StatementValue>) -> &mut Self {
        self.statements.push(Statement { label: label.to_string(), value: value.into() });
        self
    }

    pub fn counterexample(&mut self, l: &SubgroupLattice, description: impl Into<String>, subgroups: &[SubgroupId]) {
        self.counterexamples.push(CounterexampleRecord {
            description: description.into(),
            subgroups: subgroups.iter().map(|&i| SubgroupRecord::of(l, i)).collect(),
        });
    }

    /// Records a failing instance that becomes a counterexample only if the
    /// check fails; a statement being false is not by itself a failure.
    pub fn evidence(&mut self, l: &SubgroupLattice, description: impl Into<String>, subgroups: &[SubgroupId]) {
        self.evidence.push(CounterexampleRecord {
            description: description.into(),
            subgroups: subgroups.iter().map(|&i| SubgroupRecord::of(l, i)).collect(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    /// A report whose hypothesis does not hold for this group.
    pub fn not_applicable(mut self, reason: &str) -> TheoremReport {
        self.notes.push(reason.to_string());
        TheoremReport {
            theorem_id: self.id,
            group_name: self.group,
            outcome: Outcome::NotApplicable,
            pass: true,
            statements: self.statements,
            counterexamples: self.counterexamples,
            notes: self.notes,
        }
    }

    /// Whether the statements recorded so far satisfy `relation`.
    pub fn holds(&self, relation: Relation) -> bool {
        let values: Vec<Option<bool>> = self.statements.iter().map(|s| s.value.as_bool()).collect();
        let applicable: Vec<bool> = values.iter().flatten().copied().collect();
        match relation {
            Relation::Equivalent => applicable.windows(2).all(|w| w[0] == w[1]),
            Relation::AllTrue => applicable.iter().all(|&b| b),
            Relation::Implications => values
                .chunks(2)
                .all(|c| !matches!(c, [Some(true), Some(false)])),
            Relation::Biconditionals => values
                .chunks(2)
                .all(|c| !matches!(c, [Some(a), Some(b)] if a != b)),
        }
    }

    pub fn finish(self, relation: Relation) -> TheoremReport {
        let pass = self.holds(relation);
        self.finish_with(pass)
    }

    /// Finishes with a pass flag computed by the caller.
    pub fn finish_with(mut self, pass: bool) -> TheoremReport {
        if !pass {
            let evidence = std::mem::take(&mut self.evidence);
            self.counterexamples.extend(evidence);
        }
        let applicable = self.statements.iter().any(|s| s.value.as_bool().is_some());
        let outcome = if !applicable {
            Outcome::NotApplicable
        } else if pass && self.counterexamples.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        TheoremReport {
            theorem_id: self.id,
            group_name: self.group,
            pass: outcome != Outcome::Fail,
            outcome,
            statements: self.statements,
            counterexamples: self.counterexamples,
            notes: self.notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equivalence_ignores_not_applicable() {
        let mut b = ReportBuilder::new("X", "g");
        b.statement("a", true).statement("b", StatementValue::NotApplicable).statement("c", true);
        assert_eq!(b.finish(Relation::Equivalent).outcome, Outcome::Pass);
        let mut b = ReportBuilder::new("X", "g");
        b.statement("a", true).statement("b", false);
        assert_eq!(b.finish(Relation::Equivalent).outcome, Outcome::Fail);
    }

    #[test]
    fn implication_pairs() {
        let mut b = ReportBuilder::new("X", "g");
        b.statement("p", false).statement("q", false).statement("r", true).statement("s", true);
        assert!(b.finish(Relation::Implications).pass);
        let mut b = ReportBuilder::new("X", "g");
        b.statement("p", true).statement("q", false);
        assert!(!b.finish(Relation::Implications).pass);
    }

    #[test]
    fn all_not_applicable_is_not_applicable() {
        let mut b = ReportBuilder::new("X", "g");
        b.statement("a", StatementValue::NotApplicable);
        assert_eq!(b.finish(Relation::AllTrue).outcome, Outcome::NotApplicable);
    }
}
