//! The full subgroup lattice of a group, with inclusion, conjugation and
//! Sylow data precomputed so that the predicates can work on subgroup ids.
//!
//! Subgroups are listed in canonical order: by order, then by the sorted
//! member list compared lexicographically. Id `0` is the trivial subgroup and
//! the last id is the whole group.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::{ensure_prime, factorize, p_part};
use crate::bitset::BitSet;
use crate::error::{GroupError, Result};
use crate::group::{Elem, GroupTable, DEFAULT_ORDER_CAP};
use crate::subgroups::{conjugate_set, generated_subgroup, ElementSet};

/// Index of a subgroup within its lattice.
pub type SubgroupId = usize;

pub struct SubgroupLattice {
    group: Arc<GroupTable>,
    sets: Vec<ElementSet>,
    orders: Vec<usize>,
    generators: Vec<Vec<Elem>>,
    index: HashMap<ElementSet, SubgroupId>,
    /// `supersets[i]` holds every `j` with `S_i ⊆ S_j`.
    supersets: Vec<BitSet>,
    /// `subsets[i]` holds every `j` with `S_j ⊆ S_i`.
    subsets: Vec<BitSet>,
    /// `conj[i * |G| + x]` is the id of `S_i^x`.
    conj: Vec<u32>,
    normalizers: Vec<SubgroupId>,
    sylows: Vec<Vec<(u64, Vec<SubgroupId>)>>,
    classes: Vec<Vec<SubgroupId>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group.name())
            .field("subgroups", &self.sets.len())
            .finish()
    }
}

/// Enumerates every subgroup of `g` (order must not exceed the default cap).
pub fn all_subgroups(g: Arc<GroupTable>) -> Result<SubgroupLattice> {
    SubgroupLattice::with_cap(g, DEFAULT_ORDER_CAP)
}

impl SubgroupLattice {
    pub fn new(g: Arc<GroupTable>) -> Result<Self> {
        Self::with_cap(g, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(g: Arc<GroupTable>, cap: usize) -> Result<Self> {
        if g.order() > cap {
            return Err(GroupError::OrderCapExceeded {
                order: g.order(),
                cap,
            });
        }
        let (sets, generators) = enumerate(&g);
        Ok(Self::assemble(g, sets, generators))
    }

    fn assemble(g: Arc<GroupTable>, found: Vec<ElementSet>, gens: Vec<Vec<Elem>>) -> Self {
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| {
            found[a]
                .len()
                .cmp(&found[b].len())
                .then_with(|| found[a].cmp(&found[b]))
        });
        let sets: Vec<ElementSet> = order.iter().map(|&i| found[i].clone()).collect();
        let generators: Vec<Vec<Elem>> = order.iter().map(|&i| gens[i].clone()).collect();
        let n = sets.len();
        let orders: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        let index: HashMap<ElementSet, SubgroupId> =
            sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

        let mut supersets = vec![BitSet::new(n); n];
        let mut subsets = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i..n {
                if orders[j].is_multiple_of(orders[i]) && sets[i].is_subset(&sets[j]) {
                    supersets[i].insert(j);
                    subsets[j].insert(i);
                }
            }
        }

        let order_g = g.order();
        let mut conj = vec![0u32; n * order_g];
        for i in 0..n {
            for x in g.elements() {
                let c = if orders[i] == 1 || orders[i] == order_g {
                    i
                } else {
                    index[&conjugate_set(&g, &sets[i], x)]
                };
                conj[i * order_g + x] = c as u32;
            }
        }
        let normalizers: Vec<SubgroupId> = (0..n)
            .map(|i| {
                let set = BitSet::from_iter_in(
                    order_g,
                    g.elements().filter(|&x| conj[i * order_g + x] as usize == i),
                );
                index[&set]
            })
            .collect();

        let mut sylows = Vec::with_capacity(n);
        for a in 0..n {
            let mut per_prime = Vec::new();
            for (p, _) in factorize(orders[a] as u64) {
                let target = p_part(orders[a] as u64, p) as usize;
                let list: Vec<SubgroupId> = subsets[a]
                    .iter()
                    .filter(|&j| orders[j] == target)
                    .collect();
                assert!(!list.is_empty(), "Sylow existence");
                assert_eq!(list.len() as u64 % p, 1, "Sylow count ≡ 1 mod p");
                assert_eq!(orders[a] % list.len(), 0, "Sylow count divides |G|");
                per_prime.push((p, list));
            }
            sylows.push(per_prime);
        }

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members: Vec<SubgroupId> = (0..order_g)
                .map(|x| conj[i * order_g + x] as usize)
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }

        let lattice = Self {
            group: g,
            sets,
            orders,
            generators,
            index,
            supersets,
            subsets,
            conj,
            normalizers,
            sylows,
            classes,
        };
        for a in 0..n {
            for (_, list) in &lattice.sylows[a] {
                // all Sylow p-subgroups of S_a are conjugate inside S_a
                let first = list[0];
                let orbit: BitSet = BitSet::from_iter_in(
                    n,
                    lattice.sets[a].iter().map(|x| lattice.conj(first, x)),
                );
                assert_eq!(orbit.len(), list.len(), "Sylow subgroups are conjugate");
            }
        }
        lattice
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn trivial(&self) -> SubgroupId {
        0
    }

    pub fn whole(&self) -> SubgroupId {
        self.sets.len() - 1
    }

    pub fn ids(&self) -> std::ops::Range<SubgroupId> {
        0..self.sets.len()
    }

    pub fn set(&self, i: SubgroupId) -> &ElementSet {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn order(&self, i: SubgroupId) -> usize {
        self.orders[i]
    }

    /// A (not necessarily minimal) generating set for `S_i`.
    pub fn generators(&self, i: SubgroupId) -> &[Elem] {
        &self.generators[i]
    }

    pub fn id_of(&self, set: &ElementSet) -> Option<SubgroupId> {
        self.index.get(set).copied()
    }

    /// Id of the subgroup generated by `seed`.
    pub fn id_generated_by(&self, seed: impl IntoIterator<Item = Elem>) -> SubgroupId {
        self.index[&generated_subgroup(&self.group, seed)]
    }

    /// `S_small ⊆ S_big`.
    #[inline]
    pub fn contains(&self, big: SubgroupId, small: SubgroupId) -> bool {
        self.supersets[small].contains(big)
    }

    /// Ids of all subgroups of `S_i` (including itself), ascending.
    pub fn subgroups_of(&self, i: SubgroupId) -> &BitSet {
        &self.subsets[i]
    }

    pub fn overgroups_of(&self, i: SubgroupId) -> &BitSet {
        &self.supersets[i]
    }

    /// All inclusion pairs `(i, j)` with `S_i ⊆ S_j`.
    pub fn inclusion_pairs(&self) -> impl Iterator<Item = (SubgroupId, SubgroupId)> + '_ {
        self.ids()
            .flat_map(move |i| self.supersets[i].iter().map(move |j| (i, j)))
    }

    #[inline]
    pub fn join(&self, i: SubgroupId, j: SubgroupId) -> SubgroupId {
        // The least common overgroup in canonical (size-first) order is the join.
        self.supersets[i]
            .first_common(&self.supersets[j])
            .expect("whole group contains both")
    }

    pub fn meet(&self, i: SubgroupId, j: SubgroupId) -> SubgroupId {
        self.index[&self.sets[i].intersection(&self.sets[j])]
    }

    #[inline]
    pub fn meet_order(&self, i: SubgroupId, j: SubgroupId) -> usize {
        self.sets[i].intersection_len(&self.sets[j])
    }

    /// `|S_i S_j|`.
    #[inline]
    pub fn product_order(&self, i: SubgroupId, j: SubgroupId) -> usize {
        self.orders[i] * self.orders[j] / self.meet_order(i, j)
    }

    /// `S_i S_j = S_j S_i`, decided as `|S_i S_j| = |⟨S_i, S_j⟩|`.
    #[inline]
    pub fn permutes(&self, i: SubgroupId, j: SubgroupId) -> bool {
        self.product_order(i, j) == self.orders[self.join(i, j)]
    }

    #[inline]
    pub fn conj(&self, i: SubgroupId, x: Elem) -> SubgroupId {
        self.conj[i * self.group.order() + x] as usize
    }

    pub fn normalizer(&self, i: SubgroupId) -> SubgroupId {
        self.normalizers[i]
    }

    /// `S_h ⊴ S_within` (requires `S_h ⊆ S_within` for the usual meaning).
    #[inline]
    pub fn is_normal_in(&self, h: SubgroupId, within: SubgroupId) -> bool {
        self.contains(self.normalizers[h], within)
    }

    pub fn is_normal(&self, h: SubgroupId) -> bool {
        self.normalizers[h] == self.whole()
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupId> {
        self.ids().filter(|&i| self.is_normal(i)).collect()
    }

    /// Normal subgroups of `S_a` lying inside `S_a`.
    pub fn normal_subgroups_in(&self, a: SubgroupId) -> Vec<SubgroupId> {
        self.subsets[a]
            .iter()
            .filter(|&i| self.is_normal_in(i, a))
            .collect()
    }

    /// Sylow subgroups of `S_a`, one list per prime dividing `|S_a|`.
    pub fn sylows_in(&self, a: SubgroupId) -> &[(u64, Vec<SubgroupId>)] {
        &self.sylows[a]
    }

    pub fn sylows_in_for(&self, a: SubgroupId, p: u64) -> &[SubgroupId] {
        self.sylows[a]
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, l)| l.as_slice())
            .unwrap_or(&[])
    }

    /// Sylow p-subgroup ids of `S_a`, including the trivial subgroup when
    /// `p ∤ |S_a|`.
    pub fn sylows_in_any(&self, a: SubgroupId, p: u64) -> Vec<SubgroupId> {
        let list = self.sylows_in_for(a, p);
        if list.is_empty() {
            vec![self.trivial()]
        } else {
            list.to_vec()
        }
    }

    /// Conjugacy classes of subgroups under the whole group.
    pub fn conjugacy_classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    /// `⟨S_h^x : x ∈ S_a⟩`.
    pub fn normal_closure_in(&self, h: SubgroupId, a: SubgroupId) -> SubgroupId {
        if self.is_normal_in(h, a) {
            return h;
        }
        let mut acc = h;
        for x in self.sets[a].iter() {
            acc = self.join(acc, self.conj(h, x));
        }
        acc
    }

    pub fn is_subnormal_in(&self, h: SubgroupId, a: SubgroupId) -> bool {
        let mut current = a;
        loop {
            let next = self.normal_closure_in(h, current);
            if next == current {
                return next == h;
            }
            current = next;
        }
    }

    /// Proper subgroups of `S_a` not contained in any other proper subgroup.
    pub fn maximal_in(&self, a: SubgroupId) -> Vec<SubgroupId> {
        self.subsets[a]
            .iter()
            .filter(|&j| j != a && self.supersets[j].intersection_len(&self.subsets[a]) == 2)
            .collect()
    }

    /// `K ≤ S_a` with `S_h K = S_a`.
    pub fn supplements_in(&self, h: SubgroupId, a: SubgroupId) -> Vec<SubgroupId> {
        self.subsets[a]
            .iter()
            .filter(|&k| self.is_supplement_in(h, k, a))
            .collect()
    }

    #[inline]
    pub fn is_supplement_in(&self, h: SubgroupId, k: SubgroupId, a: SubgroupId) -> bool {
        self.orders[h] * self.orders[k] == self.orders[a] * self.meet_order(h, k)
    }

    pub fn complements_in(&self, h: SubgroupId, a: SubgroupId) -> Vec<SubgroupId> {
        self.supplements_in(h, a)
            .into_iter()
            .filter(|&k| self.meet_order(h, k) == 1)
            .collect()
    }

    /// Subgroups of `S_a` whose order is the full π-part of `|S_a|`.
    pub fn hall_in(&self, a: SubgroupId, primes: &[u64]) -> Vec<SubgroupId> {
        let target: u64 = primes
            .iter()
            .map(|&p| p_part(self.orders[a] as u64, p))
            .product();
        self.subsets[a]
            .iter()
            .filter(|&j| self.orders[j] as u64 == target)
            .collect()
    }

    pub fn is_p_subgroup(&self, i: SubgroupId, p: u64) -> bool {
        p_part(self.orders[i] as u64, p) == self.orders[i] as u64
    }

    pub fn is_cyclic(&self, i: SubgroupId) -> bool {
        let g = &self.group;
        self.sets[i].iter().any(|e| g.element_order(e) == self.orders[i])
    }
}

/// Breadth-first closure: start from the cyclic subgroups and extend every
/// known subgroup by one further cyclic subgroup until nothing new appears.
fn enumerate(g: &GroupTable) -> (Vec<ElementSet>, Vec<Vec<Elem>>) {
    let mut index: HashMap<ElementSet, usize> = HashMap::new();
    let mut sets: Vec<ElementSet> = Vec::new();
    let mut gens: Vec<Vec<Elem>> = Vec::new();
    let mut cyclic_reps: Vec<(usize, Elem)> = Vec::new();

    let trivial = BitSet::from_iter_in(g.order(), [0]);
    index.insert(trivial.clone(), 0);
    sets.push(trivial);
    gens.push(vec![]);
    for e in g.elements().skip(1) {
        let c = generated_subgroup(g, [e]);
        if !index.contains_key(&c) {
            index.insert(c.clone(), sets.len());
            cyclic_reps.push((sets.len(), e));
            sets.push(c);
            gens.push(vec![e]);
        }
    }

    let mut head = 1;
    while head < sets.len() {
        let base = sets[head].clone();
        let base_gens = gens[head].clone();
        for &(cid, c) in &cyclic_reps {
            if sets[cid].is_subset(&base) {
                continue;
            }
            let mut new_gens = base_gens.clone();
            new_gens.push(c);
            let ext = close(g, &base, &new_gens);
            if !index.contains_key(&ext) {
                index.insert(ext.clone(), sets.len());
                sets.push(ext);
                gens.push(new_gens);
            }
        }
        head += 1;
    }
    (sets, gens)
}

fn close(g: &GroupTable, base: &ElementSet, gens: &[Elem]) -> ElementSet {
    let mut set = base.clone();
    let mut queue: Vec<Elem> = base.to_vec();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// All Sylow p-subgroups of the whole group.
pub fn sylow_subgroups(lattice: &SubgroupLattice, p: u64) -> Result<Vec<ElementSet>> {
    ensure_prime(p)?;
    Ok(lattice
        .sylows_in_any(lattice.whole(), p)
        .into_iter()
        .map(|i| lattice.set(i).clone())
        .collect())
}

pub fn hall_subgroups(lattice: &SubgroupLattice, primes: &[u64]) -> Vec<ElementSet> {
    let n = lattice.order(lattice.whole()) as u64;
    debug_assert!({
        let target: u64 = primes.iter().map(|&p| p_part(n, p)).product();
        crate::arith::gcd(target, n / target) == 1
    });
    lattice
        .hall_in(lattice.whole(), primes)
        .into_iter()
        .map(|i| lattice.set(i).clone())
        .collect()
}

pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<ElementSet> {
    lattice
        .maximal_in(lattice.whole())
        .into_iter()
        .map(|i| lattice.set(i).clone())
        .collect()
}

pub fn supplements(lattice: &SubgroupLattice, h: &ElementSet) -> Result<Vec<ElementSet>> {
    let h = lattice.id_of(h).ok_or(GroupError::NotASubgroup)?;
    Ok(lattice
        .supplements_in(h, lattice.whole())
        .into_iter()
        .map(|i| lattice.set(i).clone())
        .collect())
}

pub fn complements(lattice: &SubgroupLattice, h: &ElementSet) -> Result<Vec<ElementSet>> {
    let h = lattice.id_of(h).ok_or(GroupError::NotASubgroup)?;
    Ok(lattice
        .complements_in(h, lattice.whole())
        .into_iter()
        .map(|i| lattice.set(i).clone())
        .collect())
}
