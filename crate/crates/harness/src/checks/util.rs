use sstgroups_core::permutability::PredicateId;
use sstgroups_core::subgroups::{commutator_subgroup, element_commutator};
use sstgroups_core::{ClassId, Elem, GroupAnalysis, SubgroupId, SubgroupLattice};

pub(crate) fn first_failure(
    an: &GroupAnalysis,
    pred: PredicateId,
    subjects: impl IntoIterator<Item = SubgroupId>,
) -> Option<SubgroupId> {
    subjects.into_iter().find(|&h| !an.holds_in_group(pred, h))
}

pub(crate) fn every(an: &GroupAnalysis, pred: PredicateId, subjects: impl IntoIterator<Item = SubgroupId>) -> bool {
    first_failure(an, pred, subjects).is_none()
}

/// Solvable and in the class by brute force.
pub(crate) fn solvable_in(an: &GroupAnalysis, class: ClassId) -> bool {
    an.is_solvable() && an.class_holds(class)
}

/// `K` is a supplement of `H` in `S_a` (normal when asked) with every Sylow
/// subgroup of `K` permuting with `H`.
pub(crate) fn valid_supplement(l: &SubgroupLattice, h: SubgroupId, k: SubgroupId, a: SubgroupId, normal: bool) -> bool {
    l.contains(a, k)
        && l.is_supplement_in(h, k, a)
        && (!normal || l.is_normal_in(k, a))
        && l.sylows_in(k).iter().all(|(_, list)| list.iter().all(|&s| l.permutes(h, s)))
}

/// `⟨S_k^x : x ∈ S_under⟩`.
pub(crate) fn closure_under(l: &SubgroupLattice, k: SubgroupId, under: SubgroupId) -> SubgroupId {
    l.set(under).iter().fold(k, |acc, x| l.join(acc, l.conj(k, x)))
}

/// `[S_a, S_b] ≤ S_c`.
pub(crate) fn commutator_within(l: &SubgroupLattice, a: SubgroupId, b: SubgroupId, c: SubgroupId) -> bool {
    commutator_subgroup(l.group(), l.set(a), l.set(b)).is_subset(l.set(c))
}

/// `[x, S_b] ≤ S_c`.
pub(crate) fn element_commutator_within(l: &SubgroupLattice, x: Elem, b: SubgroupId, c: SubgroupId) -> bool {
    element_commutator(l.group(), x, l.set(b)).is_subset(l.set(c))
}

pub(crate) fn prime_of_p_group(l: &SubgroupLattice, h: SubgroupId) -> Option<u64> {
    let n = l.order(h) as u64;
    let primes = sstgroups_core::arith::prime_divisors(n);
    (primes.len() == 1).then(|| primes[0])
}

/// Primes dividing `|G|` but not `|S_res|`.
pub(crate) fn primes_outside(l: &SubgroupLattice, res: SubgroupId) -> Vec<u64> {
    let r = l.order(res) as u64;
    sstgroups_core::arith::prime_divisors(l.group().order() as u64)
        .into_iter()
        .filter(|p| !r.is_multiple_of(*p))
        .collect()
}

/// p-subgroups `K_p` with `S_h K_p` a Sylow p-subgroup of `G` and
/// `[S_h, ⟨K_p^L⟩] ≤ O_p(G)`.
pub(crate) struct SylowCompletion<'a> {
    l: &'a SubgroupLattice,
    p: u64,
    sylow_order: usize,
    o_p: SubgroupId,
    /// `(K_p, ⟨K_p^L⟩)` for every p-subgroup `K_p`.
    candidates: Vec<(SubgroupId, SubgroupId)>,
}

impl<'a> SylowCompletion<'a> {
    pub(crate) fn new(l: &'a SubgroupLattice, p: u64, res: SubgroupId) -> Self {
        let o_p = sstgroups_core::series::o_p_in(l, l.whole(), p).expect("prime");
        let sylow_order = sstgroups_core::arith::p_part(l.group().order() as u64, p) as usize;
        let candidates = l
            .ids()
            .filter(|&k| l.is_p_subgroup(k, p))
            .map(|k| (k, closure_under(l, k, res)))
            .collect();
        SylowCompletion { l, p, sylow_order, o_p, candidates }
    }

    pub(crate) fn p(&self) -> u64 {
        self.p
    }

    fn completes(&self, h: SubgroupId, k: SubgroupId) -> bool {
        self.l.permutes(h, k) && self.l.product_order(h, k) == self.sylow_order
    }

    pub(crate) fn for_subgroup(&self, h: SubgroupId) -> Option<SubgroupId> {
        self.candidates
            .iter()
            .find(|&&(k, cl)| self.completes(h, k) && commutator_within(self.l, h, cl, self.o_p))
            .map(|&(k, _)| k)
    }

    pub(crate) fn for_element(&self, x: Elem) -> Option<SubgroupId> {
        let h = self.l.id_generated_by([x]);
        self.candidates
            .iter()
            .find(|&&(k, cl)| self.completes(h, k) && element_commutator_within(self.l, x, cl, self.o_p))
            .map(|&(k, _)| k)
    }
}
