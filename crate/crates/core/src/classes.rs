//! Group classes decided two ways: by brute-force transitivity of an
//! embedding predicate over all chains `H ≤ K ≤ G`, and by structural
//! characterisations.

use std::fmt;
use std::str::FromStr;

use crate::analysis::GroupAnalysis;
use crate::arith::{gcd, is_prime, p_part, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::Elem;
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::permutability::PredicateId;
use crate::series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    T,
    PT,
    PST,
    BT,
    SBT,
    SST,
    NSST,
    SC,
    Nilpotent,
    Solvable,
    Supersolvable,
    Complemented,
}

impl ClassId {
    pub const ALL: [ClassId; 12] = [
        ClassId::T,
        ClassId::PT,
        ClassId::PST,
        ClassId::BT,
        ClassId::SBT,
        ClassId::SST,
        ClassId::NSST,
        ClassId::SC,
        ClassId::Nilpotent,
        ClassId::Solvable,
        ClassId::Supersolvable,
        ClassId::Complemented,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::T => "T",
            ClassId::PT => "PT",
            ClassId::PST => "PST",
            ClassId::BT => "BT",
            ClassId::SBT => "SBT",
            ClassId::SST => "SST",
            ClassId::NSST => "NSST",
            ClassId::SC => "SC",
            ClassId::Nilpotent => "nilpotent",
            ClassId::Solvable => "solvable",
            ClassId::Supersolvable => "supersolvable",
            ClassId::Complemented => "complemented",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// The predicate whose transitivity defines the class.
    pub fn relation(self) -> Option<PredicateId> {
        Some(match self {
            ClassId::T => PredicateId::Normal,
            ClassId::PT => PredicateId::Permutable,
            ClassId::PST => PredicateId::SPermutable,
            ClassId::BT => PredicateId::Semipermutable,
            ClassId::SBT => PredicateId::SSemipermutable,
            ClassId::SST => PredicateId::SsPermutable,
            ClassId::NSST => PredicateId::NssPermutable,
            _ => return None,
        })
    }

    pub fn for_relation(pred: PredicateId) -> Result<ClassId> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.relation() == Some(pred))
            .ok_or_else(|| GroupError::UnknownRelation(pred.as_str().to_string()))
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::InvalidSpec(format!("unknown class {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Via {
    Bruteforce = 0,
    Characterization = 1,
}

impl Via {
    pub fn as_str(self) -> &'static str {
        match self {
            Via::Bruteforce => "bruteforce",
            Via::Characterization => "characterization",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    NotApplicable,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::NotApplicable => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassCounterexample {
    /// `inner ≤ middle ≤ G` breaking transitivity.
    Chain { inner: SubgroupId, middle: SubgroupId },
    Subgroup(SubgroupId),
    SylowPair(SubgroupId, SubgroupId),
    /// `l^x ∉ ⟨l⟩`.
    Conjugation { element: Elem, by: Elem },
    ChiefFactor { top: SubgroupId, bottom: SubgroupId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class_id: ClassId,
    pub via: Via,
    pub verdict: Verdict,
    pub counterexample: Option<ClassCounterexample>,
}

impl ClassVerdict {
    fn new(class_id: ClassId, via: Via, failure: Option<ClassCounterexample>) -> Self {
        ClassVerdict { class_id, via, verdict: failure.is_none().into(), counterexample: failure }
    }

    fn plain(class_id: ClassId, via: Via, verdict: bool) -> Self {
        ClassVerdict { class_id, via, verdict: verdict.into(), counterexample: None }
    }

    fn not_applicable(class_id: ClassId, via: Via) -> Self {
        ClassVerdict { class_id, via, verdict: Verdict::NotApplicable, counterexample: None }
    }
}

pub(crate) fn evaluate_class(an: &GroupAnalysis, class: ClassId, via: Via) -> ClassVerdict {
    let l = an.lattice();
    match (class, via) {
        (c, Via::Bruteforce) if c.relation().is_some() => {
            is_transitive_class_in(an, c.relation().unwrap(), l.whole()).expect("relation has a class")
        }
        (ClassId::PST, Via::Characterization) => is_pst_characterization(an),
        (ClassId::BT | ClassId::SBT, Via::Characterization) => {
            ClassVerdict { class_id: class, ..is_bt_characterization(an) }
        }
        (ClassId::SST, Via::Characterization) => is_sst_characterization(an),
        (ClassId::NSST, Via::Characterization) => {
            ClassVerdict { class_id: class, ..cyclic_prime_power_check(an, class, PredicateId::NssPermutable) }
        }
        (ClassId::SC, Via::Bruteforce) => ClassVerdict::plain(class, via, series::is_sc_group(l)),
        (ClassId::Nilpotent, Via::Bruteforce) => {
            ClassVerdict::plain(class, via, series::is_nilpotent(l.group()))
        }
        (ClassId::Solvable, Via::Bruteforce) => ClassVerdict::plain(class, via, an.is_solvable()),
        (ClassId::Supersolvable, Via::Bruteforce) => is_supersolvable(an),
        (ClassId::Supersolvable, Via::Characterization) => {
            ClassVerdict::plain(class, via, an.is_solvable() && series::is_sc_group(l))
        }
        (ClassId::Complemented, Via::Bruteforce) => is_complemented(an),
        (ClassId::Complemented, Via::Characterization) => ClassVerdict::plain(
            class,
            via,
            is_supersolvable(an).verdict.is_true() && series::sylows_elementary_abelian(l),
        ),
        _ => ClassVerdict::not_applicable(class, via),
    }
}

/// Whether `relation` is transitive inside `S_a`: for all `H ≤ K ≤ S_a` with
/// `relation(H in K)` and `relation(K in S_a)`, `relation(H in S_a)`.
pub fn is_transitive_class_in(an: &GroupAnalysis, relation: PredicateId, a: SubgroupId) -> Result<ClassVerdict> {
    let class = ClassId::for_relation(relation)?;
    let l = an.lattice();
    for k in l.subgroups_of(a).iter() {
        if !an.holds(relation, a, k) {
            continue;
        }
        for h in l.subgroups_of(k).iter() {
            if an.holds(relation, k, h) && !an.holds(relation, a, h) {
                let cx = ClassCounterexample::Chain { inner: h, middle: k };
                return Ok(ClassVerdict::new(class, Via::Bruteforce, Some(cx)));
            }
        }
    }
    Ok(ClassVerdict::new(class, Via::Bruteforce, None))
}

pub fn is_transitive_class(an: &GroupAnalysis, relation: PredicateId) -> Result<ClassVerdict> {
    is_transitive_class_in(an, relation, an.lattice().whole())
}

/// Agrawal's criterion: the nilpotent residual is an abelian normal Hall
/// subgroup on which the group acts by power automorphisms.
pub fn is_pst_characterization(an: &GroupAnalysis) -> ClassVerdict {
    let (class, via) = (ClassId::PST, Via::Characterization);
    if !an.is_solvable() {
        return ClassVerdict::not_applicable(class, via);
    }
    ClassVerdict::new(class, via, pst_failure(an))
}

fn pst_failure(an: &GroupAnalysis) -> Option<ClassCounterexample> {
    let l = an.lattice();
    let g = l.group();
    let res = an.nilpotent_residual();
    let set = l.set(res);
    let abelian = set.iter().all(|x| set.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
    if !abelian || !series::is_hall(l, res) {
        return Some(ClassCounterexample::Subgroup(res));
    }
    power_map_failure(l, res)
}

fn power_map_failure(l: &SubgroupLattice, n: SubgroupId) -> Option<ClassCounterexample> {
    let g = l.group();
    for e in l.set(n).iter() {
        let cyclic = l.id_generated_by([e]);
        let powers = l.set(cyclic);
        if let Some(x) = g.elements().find(|&x| !powers.contains(g.conj(e, x))) {
            return Some(ClassCounterexample::Conjugation { element: e, by: x });
        }
    }
    None
}

/// PST by Agrawal plus `[G_p, G_q] = 1` for Sylow subgroups at distinct
/// primes outside `π(L)`.
pub fn is_bt_characterization(an: &GroupAnalysis) -> ClassVerdict {
    let (class, via) = (ClassId::BT, Via::Characterization);
    if !an.is_solvable() {
        return ClassVerdict::not_applicable(class, via);
    }
    if let Some(cx) = pst_failure(an) {
        return ClassVerdict::new(class, via, Some(cx));
    }
    let l = an.lattice();
    let g = l.group();
    let res_order = l.order(an.nilpotent_residual()) as u64;
    let outside: Vec<u64> = prime_divisors(g.order() as u64)
        .into_iter()
        .filter(|p| !res_order.is_multiple_of(*p))
        .collect();
    for (i, &p) in outside.iter().enumerate() {
        for &q in &outside[i + 1..] {
            for &sp in l.sylows_in_for(l.whole(), p) {
                for &sq in l.sylows_in_for(l.whole(), q) {
                    let (a, b) = (l.set(sp), l.set(sq));
                    if !a.iter().all(|x| b.iter().all(|y| g.mul(x, y) == g.mul(y, x))) {
                        return ClassVerdict::new(class, via, Some(ClassCounterexample::SylowPair(sp, sq)));
                    }
                }
            }
        }
    }
    ClassVerdict::new(class, via, None)
}

/// Every cyclic subgroup of prime power order is SS-permutable.
pub fn is_sst_characterization(an: &GroupAnalysis) -> ClassVerdict {
    cyclic_prime_power_check(an, ClassId::SST, PredicateId::SsPermutable)
}

fn cyclic_prime_power_check(an: &GroupAnalysis, class: ClassId, pred: PredicateId) -> ClassVerdict {
    let via = Via::Characterization;
    if !an.is_solvable() {
        return ClassVerdict::not_applicable(class, via);
    }
    let l = an.lattice();
    let failure = cyclic_prime_power_subgroups(l)
        .into_iter()
        .find(|&h| !an.holds_in_group(pred, h))
        .map(ClassCounterexample::Subgroup);
    ClassVerdict::new(class, via, failure)
}

/// Nontrivial cyclic subgroups of prime power order, canonical order.
pub fn cyclic_prime_power_subgroups(l: &SubgroupLattice) -> Vec<SubgroupId> {
    l.ids()
        .filter(|&i| l.order(i) > 1 && is_prime_power_order(l.order(i)) && l.is_cyclic(i))
        .collect()
}

/// Nontrivial subgroups of prime power order, canonical order.
pub fn prime_power_subgroups(l: &SubgroupLattice) -> Vec<SubgroupId> {
    l.ids()
        .filter(|&i| l.order(i) > 1 && is_prime_power_order(l.order(i)))
        .collect()
}

fn is_prime_power_order(n: usize) -> bool {
    crate::arith::is_prime_power(n as u64)
}

/// Chief factors all of prime order, cross-checked against solvable ∧ SC.
pub fn is_supersolvable(an: &GroupAnalysis) -> ClassVerdict {
    let l = an.lattice();
    let chain = series::chief_ids_below(l, l.whole(), series::TieBreak::Least);
    let failure = chain
        .windows(2)
        .find(|w| !is_prime((l.order(w[1]) / l.order(w[0])) as u64))
        .map(|w| ClassCounterexample::ChiefFactor { top: w[1], bottom: w[0] });
    let verdict = ClassVerdict::new(ClassId::Supersolvable, Via::Bruteforce, failure);
    assert_eq!(
        verdict.verdict.is_true(),
        an.is_solvable() && series::is_sc_group(l),
        "supersolvability disagrees with solvable SC for {}",
        l.group().name()
    );
    verdict
}

/// Every subgroup has a complement; the least subgroup without one is the
/// counterexample.
pub fn is_complemented(an: &GroupAnalysis) -> ClassVerdict {
    let l = an.lattice();
    let failure = l
        .ids()
        .find(|&h| !l.subgroups_of(l.whole()).iter().any(|k| {
            l.meet_order(h, k) == 1 && l.order(h) * l.order(k) == l.order(l.whole())
        }))
        .map(ClassCounterexample::Subgroup);
    ClassVerdict::new(ClassId::Complemented, Via::Bruteforce, failure)
}

/// `l^x ∈ ⟨l⟩` for all `x ∈ G`, `l ∈ S_n`. Cross-checked against "every
/// subgroup of `S_n` is normal in `G`".
pub fn acts_by_power_automorphisms(l: &SubgroupLattice, n: SubgroupId) -> Result<bool> {
    if !l.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let by_elements = power_map_failure(l, n).is_none();
    let by_subgroups = l.subgroups_of(n).iter().all(|s| l.is_normal(s));
    assert_eq!(by_elements, by_subgroups);
    Ok(by_elements)
}

/// For a normal p-subgroup `S_n`: every chief factor of `G` below it has
/// order p and all of them carry the same conjugation action, compared as
/// the exponent map `x ↦ k` with `m^x ≡ m^k` modulo the factor's bottom.
pub fn chief_factors_below_cyclic_and_g_isomorphic(l: &SubgroupLattice, n: SubgroupId) -> Result<bool> {
    if !l.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let size = l.order(n) as u64;
    if size == 1 {
        return Ok(true);
    }
    let p = prime_divisors(size)[0];
    if p_part(size, p) != size {
        return Err(GroupError::NotPGroup);
    }
    let g = l.group();
    let chain = series::chief_ids_below(l, n, series::TieBreak::Least);
    let mut reference: Option<Vec<u64>> = None;
    for w in chain.windows(2) {
        let (bottom, top) = (l.set(w[0]), l.set(w[1]));
        if (top.len() / bottom.len()) as u64 != p {
            return Ok(false);
        }
        let m = top.iter().find(|&e| !bottom.contains(e)).expect("proper step");
        let powers: Vec<Elem> = (0..p).scan(0, |acc, _| {
            let out = *acc;
            *acc = g.mul(*acc, m);
            Some(out)
        }).collect();
        let exponents: Vec<u64> = g
            .elements()
            .map(|x| {
                let image = g.conj(m, x);
                (0..p)
                    .find(|&k| bottom.contains(g.mul(g.inv(powers[k as usize]), image)))
                    .expect("factor is normal")
            })
            .collect();
        match &reference {
            None => reference = Some(exponents),
            Some(r) if *r != exponents => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// `gcd(|S_a|, |S_b|) = 1`.
pub fn coprime(l: &SubgroupLattice, a: SubgroupId, b: SubgroupId) -> bool {
    gcd(l.order(a) as u64, l.order(b) as u64) == 1
}
