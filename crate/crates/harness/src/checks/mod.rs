//! Executable checks, one strategy per identifier, looked up by name.

mod lemmas;
mod oracles;
mod products;
mod structure;
mod util;

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use sstgroups_core::GroupAnalysis;

use crate::report::TheoremReport;
use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(non_camel_case_types)]
pub enum CheckId {
    T1_1,
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    C1_4,
    C1_6,
    C1_7,
    L2_1,
    L2_2,
    L2_3,
    L2_4,
    L2_5,
    L2_6,
    L2_7,
    L2_8,
    L3_1,
    KEGEL,
    ORACLES,
}

impl CheckId {
    pub const ALL: [CheckId; 24] = [
        CheckId::T1_1,
        CheckId::A,
        CheckId::B,
        CheckId::C,
        CheckId::D,
        CheckId::E,
        CheckId::F,
        CheckId::G,
        CheckId::H,
        CheckId::I,
        CheckId::C1_4,
        CheckId::C1_6,
        CheckId::C1_7,
        CheckId::L2_1,
        CheckId::L2_2,
        CheckId::L2_3,
        CheckId::L2_4,
        CheckId::L2_5,
        CheckId::L2_6,
        CheckId::L2_7,
        CheckId::L2_8,
        CheckId::L3_1,
        CheckId::KEGEL,
        CheckId::ORACLES,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::T1_1 => "T1_1",
            CheckId::A => "A",
            CheckId::B => "B",
            CheckId::C => "C",
            CheckId::D => "D",
            CheckId::E => "E",
            CheckId::F => "F",
            CheckId::G => "G",
            CheckId::H => "H",
            CheckId::I => "I",
            CheckId::C1_4 => "C1_4",
            CheckId::C1_6 => "C1_6",
            CheckId::C1_7 => "C1_7",
            CheckId::L2_1 => "L2_1",
            CheckId::L2_2 => "L2_2",
            CheckId::L2_3 => "L2_3",
            CheckId::L2_4 => "L2_4",
            CheckId::L2_5 => "L2_5",
            CheckId::L2_6 => "L2_6",
            CheckId::L2_7 => "L2_7",
            CheckId::L2_8 => "L2_8",
            CheckId::L3_1 => "L3_1",
            CheckId::KEGEL => "KEGEL",
            CheckId::ORACLES => "ORACLES",
        }
    }

    /// Every id except the internal oracle suite.
    pub fn standard() -> Vec<CheckId> {
        CheckId::ALL.into_iter().filter(|&c| c != CheckId::ORACLES).collect()
    }

    /// Parses a comma-separated id list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>, HarnessError> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(CheckId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        registry()
            .get(s)
            .map(|c| c.id())
            .ok_or_else(|| HarnessError::UnknownCheck(s.to_string()))
    }
}

/// Everything a check may look at for one catalog entry.
pub struct CheckContext<'a> {
    pub name: &'a str,
    pub analysis: &'a GroupAnalysis,
    /// Analyses of the direct factors when the entry is built as a direct
    /// product of at least two groups; empty otherwise.
    pub factors: &'a [Arc<GroupAnalysis>],
}

pub trait TheoremCheck: Send + Sync {
    fn id(&self) -> CheckId;

    fn aliases(&self) -> &'static [&'static str] {
        &[]
    }

    fn run(&self, ctx: &CheckContext<'_>) -> TheoremReport;
}

/// A check backed by a plain function.
pub(crate) struct FnCheck {
    pub id: CheckId,
    pub aliases: &'static [&'static str],
    pub run: fn(&CheckContext<'_>) -> TheoremReport,
}

impl TheoremCheck for FnCheck {
    fn id(&self) -> CheckId {
        self.id
    }

    fn aliases(&self) -> &'static [&'static str] {
        self.aliases
    }

    fn run(&self, ctx: &CheckContext<'_>) -> TheoremReport {
        (self.run)(ctx)
    }
}

pub(crate) fn boxed(id: CheckId, aliases: &'static [&'static str], run: fn(&CheckContext<'_>) -> TheoremReport) -> Box<dyn TheoremCheck> {
    Box::new(FnCheck { id, aliases, run })
}

pub struct CheckRegistry {
    entries: Vec<Box<dyn TheoremCheck>>,
}

impl CheckRegistry {
    pub fn standard() -> Self {
        let mut entries: Vec<Box<dyn TheoremCheck>> = Vec::new();
        entries.extend(structure::checks());
        entries.extend(products::checks());
        entries.extend(lemmas::checks());
        entries.extend(oracles::checks());
        entries.sort_by_key(|c| c.id());
        debug_assert!(entries.iter().map(|c| c.id()).eq(CheckId::ALL));
        CheckRegistry { entries }
    }

    pub fn get(&self, name: &str) -> Option<&dyn TheoremCheck> {
        self.entries
            .iter()
            .find(|c| c.id().as_str().eq_ignore_ascii_case(name) || c.aliases().iter().any(|a| a.eq_ignore_ascii_case(name)))
            .map(|c| c.as_ref())
    }

    pub fn by_id(&self, id: CheckId) -> &dyn TheoremCheck {
        self.entries
            .iter()
            .find(|c| c.id() == id)
            .expect("every id is registered")
            .as_ref()
    }

    pub fn ids(&self) -> impl Iterator<Item = CheckId> + '_ {
        self.entries.iter().map(|c| c.id())
    }
}

pub fn registry() -> &'static CheckRegistry {
    static REGISTRY: OnceLock<CheckRegistry> = OnceLock::new();
    REGISTRY.get_or_init(CheckRegistry::standard)
}

pub fn run_check(id: CheckId, ctx: &CheckContext<'_>) -> TheoremReport {
    registry().by_id(id).run(ctx)
}
