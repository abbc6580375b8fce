//! Characteristic subgroups and series: derived and central series,
//! nilpotent residual, `O_p`, `O^p`, Fitting and generalised Fitting
//! subgroups, Frattini subgroup, hypercentre, chief series and system
//! normalizers.
//!
//! Functions suffixed `_in` work inside a subgroup of the lattice's group,
//! treating that subgroup as the ambient group.

use crate::arith::{ensure_prime, factorize, gcd, p_part, prime_divisors};
use crate::bitset::BitSet;
use crate::error::{GroupError, Result};
use crate::group::{quotient, GroupTable};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::subgroups::{
    center, centralizer, commutator_subgroup, generated_subgroup, trivial, whole, ElementSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Chief,
    NormalClosureChain,
}

/// A chain of subgroups. Descending kinds start at the group, ascending
/// kinds at the trivial subgroup; the stable term appears once, last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRecord {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
}

impl SeriesRecord {
    pub fn last(&self) -> &ElementSet {
        self.terms.last().expect("series is never empty")
    }
}

fn iterate(kind: SeriesKind, start: ElementSet, step: impl Fn(&ElementSet) -> ElementSet) -> SeriesRecord {
    let mut terms = vec![start];
    loop {
        let next = step(terms.last().unwrap());
        if &next == terms.last().unwrap() {
            return SeriesRecord { kind, terms };
        }
        terms.push(next);
    }
}

pub fn derived_subgroup(g: &GroupTable) -> ElementSet {
    let w = whole(g);
    commutator_subgroup(g, &w, &w)
}

pub fn derived_series(g: &GroupTable) -> SeriesRecord {
    derived_series_of(g, &whole(g))
}

pub fn derived_series_of(g: &GroupTable, a: &ElementSet) -> SeriesRecord {
    iterate(SeriesKind::Derived, a.clone(), |t| commutator_subgroup(g, t, t))
}

pub fn lower_central_series(g: &GroupTable) -> SeriesRecord {
    lower_central_series_of(g, &whole(g))
}

pub fn lower_central_series_of(g: &GroupTable, a: &ElementSet) -> SeriesRecord {
    iterate(SeriesKind::LowerCentral, a.clone(), |t| commutator_subgroup(g, t, a))
}

/// `Z_0 = 1`, `Z_{i+1} = {x : [x, y] ∈ Z_i for all y}`.
pub fn upper_central_series(g: &GroupTable) -> SeriesRecord {
    upper_central_series_of(g, &whole(g))
}

pub fn upper_central_series_of(g: &GroupTable, a: &ElementSet) -> SeriesRecord {
    iterate(SeriesKind::UpperCentral, trivial(g), |z| {
        BitSet::from_iter_in(
            g.order(),
            a.iter().filter(|&x| a.iter().all(|y| z.contains(g.commutator(x, y)))),
        )
    })
}

pub fn is_solvable_set(g: &GroupTable, a: &ElementSet) -> bool {
    derived_series_of(g, a).last().len() == 1
}

pub fn is_nilpotent_set(g: &GroupTable, a: &ElementSet) -> bool {
    lower_central_series_of(g, a).last().len() == 1
}

pub fn is_solvable(g: &GroupTable) -> bool {
    is_solvable_set(g, &whole(g))
}

pub fn is_nilpotent(g: &GroupTable) -> bool {
    is_nilpotent_set(g, &whole(g))
}

/// Stable term of the lower central series: the least normal subgroup with
/// nilpotent quotient.
pub fn nilpotent_residual(g: &GroupTable) -> ElementSet {
    lower_central_series(g).last().clone()
}

pub fn nilpotent_residual_of(g: &GroupTable, a: &ElementSet) -> ElementSet {
    lower_central_series_of(g, a).last().clone()
}

/// Independent route: scan normal subgroups for the least one whose
/// quotient table has a complete upper central series.
pub fn nilpotent_residual_by_search(lattice: &SubgroupLattice) -> Result<ElementSet> {
    let g = lattice.group();
    let mut best: Option<SubgroupId> = None;
    for n in lattice.normal_subgroups() {
        let (q, _) = quotient(g, lattice.set(n))?;
        if upper_central_series(&q).last().len() == q.order() {
            match best {
                None => best = Some(n),
                Some(b) if lattice.contains(n, b) => {}
                Some(b) if lattice.contains(b, n) => best = Some(n),
                Some(_) => {
                    return Err(GroupError::InvalidTable(
                        "two incomparable normal subgroups with nilpotent quotient".into(),
                    ))
                }
            }
        }
    }
    Ok(lattice.set(best.expect("G/G is nilpotent")).clone())
}

/// Intersection of all Sylow p-subgroups.
pub fn o_p(lattice: &SubgroupLattice, p: u64) -> Result<ElementSet> {
    o_p_in(lattice, lattice.whole(), p).map(|i| lattice.set(i).clone())
}

pub fn o_p_in(lattice: &SubgroupLattice, a: SubgroupId, p: u64) -> Result<SubgroupId> {
    ensure_prime(p)?;
    let mut acc = lattice.set(a).clone();
    for s in lattice.sylows_in_any(a, p) {
        acc.intersect_with(lattice.set(s));
    }
    Ok(lattice.id_of(&acc).expect("intersection of subgroups"))
}

/// Independent route: the largest normal p-subgroup by lattice scan.
pub fn o_p_by_search(lattice: &SubgroupLattice, p: u64) -> Result<ElementSet> {
    ensure_prime(p)?;
    let normal_p: Vec<SubgroupId> = lattice
        .normal_subgroups()
        .into_iter()
        .filter(|&i| lattice.is_p_subgroup(i, p))
        .collect();
    let top = *normal_p.last().expect("trivial subgroup qualifies");
    if normal_p.iter().any(|&i| !lattice.contains(top, i)) {
        return Err(GroupError::InvalidTable("normal p-subgroups have no maximum".into()));
    }
    Ok(lattice.set(top).clone())
}

/// `O^p(G)`: generated by the elements of order coprime to `p`.
pub fn o_p_residual(g: &GroupTable, p: u64) -> Result<ElementSet> {
    ensure_prime(p)?;
    Ok(generated_subgroup(
        g,
        g.elements().filter(|&e| !(g.element_order(e) as u64).is_multiple_of(p)),
    ))
}

/// Independent route: least normal subgroup with p-power index.
pub fn o_p_residual_by_search(lattice: &SubgroupLattice, p: u64) -> Result<ElementSet> {
    ensure_prime(p)?;
    let n = lattice.order(lattice.whole()) as u64;
    let first = lattice
        .normal_subgroups()
        .into_iter()
        .find(|&i| {
            let index = n / lattice.order(i) as u64;
            p_part(index, p) == index
        })
        .expect("G itself qualifies");
    Ok(lattice.set(first).clone())
}

/// Product of the `O_p(G)`.
pub fn fitting(lattice: &SubgroupLattice) -> SubgroupId {
    fitting_in(lattice, lattice.whole())
}

pub fn fitting_in(lattice: &SubgroupLattice, a: SubgroupId) -> SubgroupId {
    let mut acc = lattice.trivial();
    for p in prime_divisors(lattice.order(a) as u64) {
        acc = lattice.join(acc, o_p_in(lattice, a, p).expect("prime"));
    }
    acc
}

/// Independent route: the largest normal nilpotent subgroup by lattice scan.
pub fn fitting_by_search(lattice: &SubgroupLattice) -> SubgroupId {
    let g = lattice.group();
    let nilpotent_normal: Vec<SubgroupId> = lattice
        .normal_subgroups()
        .into_iter()
        .filter(|&i| is_nilpotent_set(g, lattice.set(i)))
        .collect();
    let top = *nilpotent_normal.last().unwrap();
    assert!(nilpotent_normal.iter().all(|&i| lattice.contains(top, i)));
    top
}

/// Components: subnormal `Q` with `Q = Q'` and `Q/Z(Q)` simple.
pub fn components(lattice: &SubgroupLattice) -> Vec<SubgroupId> {
    let g = lattice.group();
    let whole = lattice.whole();
    lattice
        .ids()
        .filter(|&q| lattice.order(q) > 1 && lattice.is_subnormal_in(q, whole))
        .filter(|&q| {
            let set = lattice.set(q);
            commutator_subgroup(g, set, set) == *set
        })
        .filter(|&q| {
            let set = lattice.set(q);
            let z = centralizer(g, set).intersection(set);
            let z = lattice.id_of(&z).expect("centre is a subgroup");
            is_simple_factor(lattice, q, z)
        })
        .collect()
}

/// `F*(G) = F(G) E(G)` with `E(G)` the join of the components.
pub fn generalized_fitting(lattice: &SubgroupLattice) -> SubgroupId {
    let mut acc = fitting(lattice);
    for q in components(lattice) {
        acc = lattice.join(acc, q);
    }
    acc
}

/// Intersection of the maximal subgroups of `S_a` (`S_a` itself if trivial).
pub fn frattini_in(lattice: &SubgroupLattice, a: SubgroupId) -> SubgroupId {
    let mut acc = lattice.set(a).clone();
    for m in lattice.maximal_in(a) {
        acc.intersect_with(lattice.set(m));
    }
    lattice.id_of(&acc).expect("intersection of subgroups")
}

pub fn frattini(lattice: &SubgroupLattice) -> ElementSet {
    let f = frattini_in(lattice, lattice.whole());
    debug_assert!(lattice.is_normal(f));
    lattice.set(f).clone()
}

pub fn hypercenter(g: &GroupTable) -> ElementSet {
    upper_central_series(g).last().clone()
}

pub fn hypercenter_of(g: &GroupTable, a: &ElementSet) -> ElementSet {
    upper_central_series_of(g, a).last().clone()
}

/// `S_top / S_bottom` is simple: nothing normal in `S_top` lies strictly
/// between them.
pub fn is_simple_factor(lattice: &SubgroupLattice, top: SubgroupId, bottom: SubgroupId) -> bool {
    if top == bottom {
        return false;
    }
    let between = lattice
        .subgroups_of(top)
        .intersection(lattice.overgroups_of(bottom));
    between
        .iter()
        .all(|x| x == top || x == bottom || !lattice.is_normal_in(x, top))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Least,
    Greatest,
}

/// Ascending chain of normal subgroups `1 = M_0 < M_1 < … < M_k = top`, each
/// step a minimal normal subgroup of `G / M_i`, chosen by `tie`. `top` must be
/// normal.
pub fn chief_ids_below(lattice: &SubgroupLattice, top: SubgroupId, tie: TieBreak) -> Vec<SubgroupId> {
    let normals: Vec<SubgroupId> = lattice
        .normal_subgroups()
        .into_iter()
        .filter(|&n| lattice.contains(top, n))
        .collect();
    let mut chain = vec![lattice.trivial()];
    let mut current = lattice.trivial();
    while current != top {
        let above: Vec<SubgroupId> = normals
            .iter()
            .copied()
            .filter(|&n| n != current && lattice.contains(n, current))
            .collect();
        let minimal = above
            .iter()
            .copied()
            .filter(|&n| !above.iter().any(|&m| m != n && lattice.contains(n, m)));
        current = match tie {
            TieBreak::Least => minimal.min(),
            TieBreak::Greatest => minimal.max(),
        }
        .expect("top lies above current");
        chain.push(current);
    }
    chain
}

/// Chief series from `G` down to `1`, least canonical minimal normal
/// subgroup at every step.
pub fn chief_series(lattice: &SubgroupLattice) -> SeriesRecord {
    let mut ids = chief_ids_below(lattice, lattice.whole(), TieBreak::Least);
    ids.reverse();
    SeriesRecord {
        kind: SeriesKind::Chief,
        terms: ids.into_iter().map(|i| lattice.set(i).clone()).collect(),
    }
}

fn factor_profile(lattice: &SubgroupLattice, tie: TieBreak) -> (bool, Vec<usize>) {
    let chain = chief_ids_below(lattice, lattice.whole(), tie);
    let simple = chain
        .windows(2)
        .all(|w| is_simple_factor(lattice, w[1], w[0]));
    let mut orders: Vec<usize> = chain
        .windows(2)
        .map(|w| lattice.order(w[1]) / lattice.order(w[0]))
        .collect();
    orders.sort_unstable();
    (simple, orders)
}

/// Every chief factor is simple.
pub fn is_sc_group(lattice: &SubgroupLattice) -> bool {
    let (simple, orders) = factor_profile(lattice, TieBreak::Least);
    if lattice.group().order() <= 60 {
        assert_eq!(
            (simple, orders),
            factor_profile(lattice, TieBreak::Greatest),
            "chief factors depend on the chosen series"
        );
    }
    simple
}

/// Orders of the chief factors, bottom to top.
pub fn chief_factor_orders(lattice: &SubgroupLattice) -> Vec<usize> {
    chief_ids_below(lattice, lattice.whole(), TieBreak::Least)
        .windows(2)
        .map(|w| lattice.order(w[1]) / lattice.order(w[0]))
        .collect()
}

pub fn pi(g: &GroupTable) -> Vec<u64> {
    prime_divisors(g.order() as u64)
}

pub fn order_p_part(g: &GroupTable, p: u64) -> Result<u64> {
    ensure_prime(p)?;
    Ok(p_part(g.order() as u64, p))
}

/// First Sylow system (one Sylow subgroup per prime, pairwise permuting) in
/// canonical order, primes ascending.
pub fn sylow_system(lattice: &SubgroupLattice) -> Option<Vec<SubgroupId>> {
    let per_prime: Vec<&[SubgroupId]> = lattice
        .sylows_in(lattice.whole())
        .iter()
        .map(|(_, l)| l.as_slice())
        .collect();
    let mut chosen = Vec::new();
    search_system(lattice, &per_prime, &mut chosen).then_some(chosen)
}

fn search_system(lattice: &SubgroupLattice, per_prime: &[&[SubgroupId]], chosen: &mut Vec<SubgroupId>) -> bool {
    let depth = chosen.len();
    if depth == per_prime.len() {
        return true;
    }
    for &s in per_prime[depth] {
        if chosen.iter().all(|&c| lattice.permutes(c, s)) {
            chosen.push(s);
            if search_system(lattice, per_prime, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Every Sylow system of the group.
pub fn all_sylow_systems(lattice: &SubgroupLattice) -> Vec<Vec<SubgroupId>> {
    let per_prime: Vec<&[SubgroupId]> = lattice
        .sylows_in(lattice.whole())
        .iter()
        .map(|(_, l)| l.as_slice())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_systems(lattice, &per_prime, &mut chosen, &mut out);
    out
}

fn collect_systems(
    lattice: &SubgroupLattice,
    per_prime: &[&[SubgroupId]],
    chosen: &mut Vec<SubgroupId>,
    out: &mut Vec<Vec<SubgroupId>>,
) {
    if chosen.len() == per_prime.len() {
        out.push(chosen.clone());
        return;
    }
    for &s in per_prime[chosen.len()] {
        if chosen.iter().all(|&c| lattice.permutes(c, s)) {
            chosen.push(s);
            collect_systems(lattice, per_prime, chosen, out);
            chosen.pop();
        }
    }
}

pub fn system_normalizer_of(lattice: &SubgroupLattice, system: &[SubgroupId]) -> SubgroupId {
    let mut acc = lattice.set(lattice.whole()).clone();
    for &s in system {
        acc.intersect_with(lattice.set(lattice.normalizer(s)));
    }
    lattice.id_of(&acc).expect("intersection of subgroups")
}

/// Intersection of the normalizers of the first Sylow system.
pub fn system_normalizer(lattice: &SubgroupLattice) -> Result<SubgroupId> {
    let g = lattice.group();
    if !is_solvable(g) {
        return Err(GroupError::NotSolvable);
    }
    let system = sylow_system(lattice).ok_or(GroupError::SystemNotFound)?;
    let d = system_normalizer_of(lattice, &system);
    debug_assert!(is_nilpotent_set(g, lattice.set(d)));
    Ok(d)
}

/// True iff the group is a direct product of its Sylow subgroups (all normal).
pub fn all_sylows_normal(lattice: &SubgroupLattice) -> bool {
    lattice
        .sylows_in(lattice.whole())
        .iter()
        .all(|(_, l)| l.len() == 1)
}

/// `gcd(|S_i|, |G : S_i|) = 1`.
pub fn is_hall(lattice: &SubgroupLattice, i: SubgroupId) -> bool {
    let n = lattice.order(lattice.whole()) as u64;
    let h = lattice.order(i) as u64;
    gcd(h, n / h) == 1
}

/// Centre of the group as a subgroup id.
pub fn center_id(lattice: &SubgroupLattice) -> SubgroupId {
    lattice.id_of(&center(lattice.group())).expect("centre is a subgroup")
}

/// Exponent of each Sylow subgroup is prime and it is abelian.
pub fn sylows_elementary_abelian(lattice: &SubgroupLattice) -> bool {
    let g = lattice.group();
    lattice.sylows_in(lattice.whole()).iter().all(|(p, l)| {
        let s = lattice.set(l[0]);
        s.iter().all(|e| g.element_order(e) as u64 == 1 || g.element_order(e) as u64 == *p)
            && s.iter().all(|x| s.iter().all(|y| g.mul(x, y) == g.mul(y, x)))
    })
}

/// `π(|S_a|)`.
pub fn pi_of(lattice: &SubgroupLattice, a: SubgroupId) -> Vec<u64> {
    factorize(lattice.order(a) as u64).into_iter().map(|(p, _)| p).collect()
}
