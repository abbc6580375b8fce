//! Subgroup embedding predicates.
//!
//! Every predicate is decided for a subject `S_h` inside an ambient subgroup
//! `S_a` of the lattice's group, so "H is X-permutable in K" is evaluated
//! without building a new table for `K`. The subgroups and Sylow subgroups
//! quantified over are those of `S_a` itself.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::arith::{ensure_prime, gcd};
use crate::error::{GroupError, Result};
use crate::group::{induced_table, Elem};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::bitset::BitSet;
use crate::subgroups::{conjugate_set, permutes, product_set, ElementSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PredicateId {
    Normal,
    Permutable,
    SPermutable,
    Semipermutable,
    SSemipermutable,
    SsPermutable,
    NssPermutable,
    TauQuasinormal,
    Abnormal,
    Subnormal,
}

impl PredicateId {
    pub const ALL: [PredicateId; 10] = [
        PredicateId::Normal,
        PredicateId::Permutable,
        PredicateId::SPermutable,
        PredicateId::Semipermutable,
        PredicateId::SSemipermutable,
        PredicateId::SsPermutable,
        PredicateId::NssPermutable,
        PredicateId::TauQuasinormal,
        PredicateId::Abnormal,
        PredicateId::Subnormal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PredicateId::Normal => "normal",
            PredicateId::Permutable => "permutable",
            PredicateId::SPermutable => "s_permutable",
            PredicateId::Semipermutable => "semipermutable",
            PredicateId::SSemipermutable => "s_semipermutable",
            PredicateId::SsPermutable => "ss_permutable",
            PredicateId::NssPermutable => "nss_permutable",
            PredicateId::TauQuasinormal => "tau_quasinormal",
            PredicateId::Abnormal => "abnormal",
            PredicateId::Subnormal => "subnormal",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PredicateId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        registry()
            .get(s)
            .map(|p| p.id())
            .ok_or_else(|| GroupError::UnknownRelation(s.to_string()))
    }
}

/// Why a predicate failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refutation {
    /// A subgroup the subject does not permute with (or, for subnormality,
    /// the subgroup where the normal closure chain stalls).
    Subgroup(SubgroupId),
    /// The least supplement together with one of its Sylow subgroups that
    /// the subject does not permute with.
    SupplementSylow { supplement: SubgroupId, sylow: SubgroupId },
    /// An element of the ambient subgroup witnessing failure.
    Element(Elem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PredicateVerdict {
    pub predicate: PredicateId,
    pub ambient: SubgroupId,
    pub subject: SubgroupId,
    pub verdict: bool,
    /// The supplement found for SS/NSS-permutability.
    pub witness: Option<SubgroupId>,
    pub refutation: Option<Refutation>,
}

impl PredicateVerdict {
    fn holds(predicate: PredicateId, ambient: SubgroupId, subject: SubgroupId) -> Self {
        PredicateVerdict { predicate, ambient, subject, verdict: true, witness: None, refutation: None }
    }

    fn fails(predicate: PredicateId, ambient: SubgroupId, subject: SubgroupId, r: Refutation) -> Self {
        PredicateVerdict {
            predicate,
            ambient,
            subject,
            verdict: false,
            witness: None,
            refutation: Some(r),
        }
    }

    fn from_failure(
        predicate: PredicateId,
        ambient: SubgroupId,
        subject: SubgroupId,
        failure: Option<Refutation>,
    ) -> Self {
        match failure {
            None => Self::holds(predicate, ambient, subject),
            Some(r) => Self::fails(predicate, ambient, subject, r),
        }
    }
}

pub trait SubgroupPredicate: Send + Sync {
    fn id(&self) -> PredicateId;

    fn aliases(&self) -> &'static [&'static str] {
        &[]
    }

    /// Decides the predicate for `S_subject` inside `S_ambient`.
    fn evaluate(&self, lattice: &SubgroupLattice, ambient: SubgroupId, subject: SubgroupId) -> PredicateVerdict;
}

fn first_nonpermuting(
    lattice: &SubgroupLattice,
    h: SubgroupId,
    candidates: impl IntoIterator<Item = SubgroupId>,
) -> Option<Refutation> {
    candidates
        .into_iter()
        .find(|&x| !lattice.permutes(h, x))
        .map(Refutation::Subgroup)
}

fn sylows_of(lattice: &SubgroupLattice, a: SubgroupId) -> impl Iterator<Item = (u64, SubgroupId)> + '_ {
    lattice
        .sylows_in(a)
        .iter()
        .flat_map(|(p, list)| list.iter().map(move |&s| (*p, s)))
}

struct Normal;

impl SubgroupPredicate for Normal {
    fn id(&self) -> PredicateId {
        PredicateId::Normal
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let failure = lattice
            .set(a)
            .iter()
            .find(|&x| lattice.conj(h, x) != h)
            .map(Refutation::Element);
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

struct Permutable;

impl SubgroupPredicate for Permutable {
    fn id(&self) -> PredicateId {
        PredicateId::Permutable
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let failure = first_nonpermuting(lattice, h, lattice.subgroups_of(a).iter());
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

struct SPermutable;

impl SubgroupPredicate for SPermutable {
    fn id(&self) -> PredicateId {
        PredicateId::SPermutable
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["s-permutable", "sp"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let failure = first_nonpermuting(lattice, h, sylows_of(lattice, a).map(|(_, s)| s));
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

struct Semipermutable;

impl SubgroupPredicate for Semipermutable {
    fn id(&self) -> PredicateId {
        PredicateId::Semipermutable
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["semi"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let order = lattice.order(h);
        let coprime = lattice
            .subgroups_of(a)
            .iter()
            .filter(|&x| gcd(order as u64, lattice.order(x) as u64) == 1);
        let failure = first_nonpermuting(lattice, h, coprime);
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

struct SSemipermutable;

impl SubgroupPredicate for SSemipermutable {
    fn id(&self) -> PredicateId {
        PredicateId::SSemipermutable
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["s-semipermutable", "ssemi"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let order = lattice.order(h) as u64;
        let coprime = sylows_of(lattice, a)
            .filter(|(p, _)| !order.is_multiple_of(*p))
            .map(|(_, s)| s);
        let failure = first_nonpermuting(lattice, h, coprime);
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

/// Scans supplements of `S_h` in `S_a` in canonical order. Returns the first
/// one with every Sylow subgroup permuting with `S_h`, or the least
/// supplement's failure.
fn supplement_search(
    lattice: &SubgroupLattice,
    a: SubgroupId,
    h: SubgroupId,
    normal_only: bool,
) -> std::result::Result<SubgroupId, Refutation> {
    let mut first_failure = None;
    for k in lattice.subgroups_of(a).iter() {
        if !lattice.is_supplement_in(h, k, a) || (normal_only && !lattice.is_normal_in(k, a)) {
            continue;
        }
        match sylows_of(lattice, k).find(|&(_, s)| !lattice.permutes(h, s)) {
            None => return Ok(k),
            Some((_, s)) => {
                first_failure.get_or_insert(Refutation::SupplementSylow { supplement: k, sylow: s });
            }
        }
    }
    Err(first_failure.expect("the ambient subgroup supplements everything"))
}

fn supplement_verdict(id: PredicateId, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
    match supplement_search(lattice, a, h, id == PredicateId::NssPermutable) {
        Ok(k) => PredicateVerdict { witness: Some(k), ..PredicateVerdict::holds(id, a, h) },
        Err(r) => PredicateVerdict::fails(id, a, h, r),
    }
}

struct SsPermutable;

impl SubgroupPredicate for SsPermutable {
    fn id(&self) -> PredicateId {
        PredicateId::SsPermutable
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["ss", "ss-permutable", "ss_quasinormal"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        supplement_verdict(self.id(), lattice, a, h)
    }
}

struct NssPermutable;

impl SubgroupPredicate for NssPermutable {
    fn id(&self) -> PredicateId {
        PredicateId::NssPermutable
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["nss", "nss-permutable"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        supplement_verdict(self.id(), lattice, a, h)
    }
}

struct TauQuasinormal;

impl SubgroupPredicate for TauQuasinormal {
    fn id(&self) -> PredicateId {
        PredicateId::TauQuasinormal
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["tau", "tau-quasinormal"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let order = lattice.order(h) as u64;
        let relevant = sylows_of(lattice, a)
            .filter(|(p, _)| !order.is_multiple_of(*p))
            .filter(|&(_, s)| gcd(order, lattice.order(lattice.normal_closure_in(s, a)) as u64) != 1)
            .map(|(_, s)| s);
        let failure = first_nonpermuting(lattice, h, relevant);
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

/// `x ∈ ⟨H, H^x⟩` for every `x` of the ambient subgroup.
struct Abnormal;

impl SubgroupPredicate for Abnormal {
    fn id(&self) -> PredicateId {
        PredicateId::Abnormal
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let failure = lattice
            .set(a)
            .iter()
            .find(|&x| !lattice.set(lattice.join(h, lattice.conj(h, x))).contains(x))
            .map(Refutation::Element);
        PredicateVerdict::from_failure(self.id(), a, h, failure)
    }
}

struct Subnormal;

impl SubgroupPredicate for Subnormal {
    fn id(&self) -> PredicateId {
        PredicateId::Subnormal
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["sn"]
    }

    fn evaluate(&self, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let mut current = a;
        loop {
            if current == h {
                return PredicateVerdict::holds(self.id(), a, h);
            }
            let next = lattice.normal_closure_in(h, current);
            if next == current {
                return PredicateVerdict::fails(self.id(), a, h, Refutation::Subgroup(current));
            }
            current = next;
        }
    }
}

/// Name-keyed collection of predicate strategies.
pub struct PredicateRegistry {
    entries: Vec<Box<dyn SubgroupPredicate>>,
}

impl PredicateRegistry {
    pub fn standard() -> Self {
        let entries: Vec<Box<dyn SubgroupPredicate>> = vec![
            Box::new(Normal),
            Box::new(Permutable),
            Box::new(SPermutable),
            Box::new(Semipermutable),
            Box::new(SSemipermutable),
            Box::new(SsPermutable),
            Box::new(NssPermutable),
            Box::new(TauQuasinormal),
            Box::new(Abnormal),
            Box::new(Subnormal),
        ];
        debug_assert!(entries.iter().enumerate().all(|(i, e)| e.id().index() == i));
        PredicateRegistry { entries }
    }

    /// Looks a predicate up by canonical name or alias, ignoring case.
    pub fn get(&self, name: &str) -> Option<&dyn SubgroupPredicate> {
        let name = name.to_ascii_lowercase();
        self.entries
            .iter()
            .find(|e| e.id().as_str() == name || e.aliases().contains(&name.as_str()))
            .map(|e| e.as_ref())
    }

    pub fn by_id(&self, id: PredicateId) -> &dyn SubgroupPredicate {
        self.entries[id.index()].as_ref()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.id().as_str())
    }
}

pub fn registry() -> &'static PredicateRegistry {
    static REGISTRY: OnceLock<PredicateRegistry> = OnceLock::new();
    REGISTRY.get_or_init(PredicateRegistry::standard)
}

/// Evaluates `pred` for `S_h` in `S_a` without caching.
pub fn evaluate(pred: PredicateId, lattice: &SubgroupLattice, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
    debug_assert!(lattice.contains(a, h));
    registry().by_id(pred).evaluate(lattice, a, h)
}

/// Memoised predicate verdicts over every (ambient, subject) pair of one
/// lattice. Safe to share between threads.
pub struct PredicateCache {
    lattice: Arc<SubgroupLattice>,
    slots: Vec<Vec<OnceLock<PredicateVerdict>>>,
}

impl PredicateCache {
    pub fn new(lattice: Arc<SubgroupLattice>) -> Self {
        let n = lattice.len();
        let slots = PredicateId::ALL
            .iter()
            .map(|_| (0..n * n).map(|_| OnceLock::new()).collect())
            .collect();
        PredicateCache { lattice, slots }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn verdict(&self, pred: PredicateId, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        let n = self.lattice.len();
        *self.slots[pred.index()][a * n + h].get_or_init(|| evaluate(pred, &self.lattice, a, h))
    }

    pub fn holds(&self, pred: PredicateId, a: SubgroupId, h: SubgroupId) -> bool {
        self.verdict(pred, a, h).verdict
    }

    /// Verdict in the whole group.
    pub fn in_group(&self, pred: PredicateId, h: SubgroupId) -> PredicateVerdict {
        self.verdict(pred, self.lattice.whole(), h)
    }
}

/// One entry of [`ss_permutable_in_normalizer_pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizerPair {
    pub inner: SubgroupId,
    pub outer: SubgroupId,
    pub normalizer: SubgroupId,
    pub ss: PredicateVerdict,
    pub nss: PredicateVerdict,
}

/// For every pair of p-subgroups `H ≤ K`, SS- and NSS-permutability of `H`
/// in `N_G(K)`.
pub fn ss_permutable_in_normalizer_pairs(cache: &PredicateCache, p: u64) -> Result<Vec<NormalizerPair>> {
    ensure_prime(p)?;
    let lattice = cache.lattice();
    let p_subgroups: Vec<SubgroupId> = lattice.ids().filter(|&i| lattice.is_p_subgroup(i, p)).collect();
    let mut out = Vec::new();
    for &k in &p_subgroups {
        let nk = lattice.normalizer(k);
        for &h in &p_subgroups {
            if lattice.contains(k, h) {
                out.push(NormalizerPair {
                    inner: h,
                    outer: k,
                    normalizer: nk,
                    ss: cache.verdict(PredicateId::SsPermutable, nk, h),
                    nss: cache.verdict(PredicateId::NssPermutable, nk, h),
                });
            }
        }
    }
    Ok(out)
}

/// Re-checks stored SS/NSS witnesses and supplement refutations from the
/// element sets alone, with the Sylow subgroups of each supplement taken from
/// a lattice of its own induced table.
pub struct WitnessChecker<'a> {
    lattice: &'a SubgroupLattice,
    sylows: HashMap<SubgroupId, Vec<ElementSet>>,
}

impl<'a> WitnessChecker<'a> {
    pub fn new(lattice: &'a SubgroupLattice) -> Self {
        WitnessChecker { lattice, sylows: HashMap::new() }
    }

    fn sylows_of(&mut self, k: SubgroupId) -> &[ElementSet] {
        let lattice = self.lattice;
        self.sylows.entry(k).or_insert_with(|| {
            let g = lattice.group();
            let (table, embed) = induced_table(g, lattice.set(k)).expect("lattice member is a subgroup");
            let inner = SubgroupLattice::with_cap(Arc::new(table), usize::MAX).expect("no cap");
            inner
                .sylows_in(inner.whole())
                .iter()
                .flat_map(|(_, l)| l.iter())
                .map(|&s| BitSet::from_iter_in(g.order(), inner.set(s).iter().map(|e| embed[e])))
                .collect()
        })
    }

    /// Returns whether the verdict is consistent with its stored evidence.
    pub fn check(&mut self, v: &PredicateVerdict) -> bool {
        let lattice = self.lattice;
        let g = lattice.group();
        let (a, h) = (lattice.set(v.ambient), lattice.set(v.subject));
        let supplement_kind = matches!(v.predicate, PredicateId::SsPermutable | PredicateId::NssPermutable);
        match (v.verdict, v.witness, v.refutation) {
            (true, Some(k), None) if supplement_kind => {
                let ks = lattice.set(k);
                let normal_ok = v.predicate != PredicateId::NssPermutable
                    || a.iter().all(|x| conjugate_set(g, ks, x) == *ks);
                ks.is_subset(a)
                    && product_set(g, h, ks) == *a
                    && normal_ok
                    && self.sylows_of(k).iter().all(|s| permutes(g, h, s))
            }
            (false, None, Some(Refutation::SupplementSylow { supplement, sylow })) if supplement_kind => {
                let ks = lattice.set(supplement);
                let ss = lattice.set(sylow);
                let is_sylow = self.sylows_of(supplement).contains(ss);
                ks.is_subset(a) && product_set(g, h, ks) == *a && is_sylow && !permutes(g, h, ss)
            }
            _ if supplement_kind => false,
            (false, None, Some(Refutation::Subgroup(x))) if v.predicate != PredicateId::Subnormal => {
                !permutes(g, h, lattice.set(x))
            }
            (false, None, Some(Refutation::Element(x))) if v.predicate == PredicateId::Normal => {
                conjugate_set(g, h, x) != *h
            }
            (false, None, Some(Refutation::Element(x))) if v.predicate == PredicateId::Abnormal => {
                let other = conjugate_set(g, h, x);
                !crate::subgroups::join(g, h, &other).contains(x)
            }
            (false, None, Some(_)) => true,
            (true, None, None) => true,
            _ => false,
        }
    }
}
