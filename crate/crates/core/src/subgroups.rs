//! Table-level subgroup operations that need no lattice: closures,
//! normalizers, centralizers, commutators and product sets.

use crate::bitset::BitSet;
use crate::group::{Elem, GroupTable};

/// A subgroup of a fixed parent group, stored as a membership bitset.
pub type ElementSet = BitSet;

/// True iff `s` contains the identity and is closed under multiplication.
/// Closure under inverses follows in a finite group.
pub fn is_subgroup_set(g: &GroupTable, s: &ElementSet) -> bool {
    if s.universe() != g.order() || !s.contains(0) {
        return false;
    }
    let members = s.to_vec();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| s.contains(g.mul(a, b))))
}

pub fn trivial(g: &GroupTable) -> ElementSet {
    BitSet::from_iter_in(g.order(), [0])
}

pub fn whole(g: &GroupTable) -> ElementSet {
    BitSet::full(g.order())
}

/// Least subgroup containing `seed`.
pub fn generated_subgroup(g: &GroupTable, seed: impl IntoIterator<Item = Elem>) -> ElementSet {
    let mut gens: Vec<Elem> = seed.into_iter().filter(|&e| e != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    closure_from(g, trivial(g), &gens)
}

/// Least subgroup containing the subgroup `base` and `extra`.
pub fn extend_subgroup(g: &GroupTable, base: &ElementSet, extra: &[Elem]) -> ElementSet {
    let mut gens: Vec<Elem> = base.iter().filter(|&e| e != 0).collect();
    gens.extend(extra.iter().copied().filter(|e| !base.contains(*e)));
    if gens.len() == base.len() - 1 {
        return base.clone();
    }
    closure_from(g, trivial(g), &gens)
}

fn closure_from(g: &GroupTable, start: ElementSet, gens: &[Elem]) -> ElementSet {
    let mut set = start;
    let mut queue: Vec<Elem> = set.to_vec();
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

/// Join of two subgroups.
pub fn join(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    generated_subgroup(g, a.iter().chain(b.iter()))
}

/// `h^x` as a set.
pub fn conjugate_set(g: &GroupTable, h: &ElementSet, x: Elem) -> ElementSet {
    BitSet::from_iter_in(g.order(), h.iter().map(|e| g.conj(e, x)))
}

pub fn normalizer(g: &GroupTable, h: &ElementSet) -> ElementSet {
    BitSet::from_iter_in(
        g.order(),
        g.elements()
            .filter(|&x| h.iter().all(|e| h.contains(g.conj(e, x)))),
    )
}

pub fn centralizer(g: &GroupTable, s: &ElementSet) -> ElementSet {
    BitSet::from_iter_in(
        g.order(),
        g.elements()
            .filter(|&x| s.iter().all(|e| g.mul(e, x) == g.mul(x, e))),
    )
}

pub fn center(g: &GroupTable) -> ElementSet {
    centralizer(g, &whole(g))
}

/// Largest normal subgroup inside `h`: the intersection of its conjugates.
pub fn core(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let mut acc = h.clone();
    for x in g.elements() {
        acc.intersect_with(&conjugate_set(g, h, x));
    }
    acc
}

pub fn normal_closure(g: &GroupTable, h: &ElementSet) -> ElementSet {
    relative_normal_closure(g, h, &whole(g))
}

/// Least subgroup containing `h` and closed under conjugation by `under`:
/// the subgroup generated by all `h^u`, `u ∈ under`.
pub fn relative_normal_closure(g: &GroupTable, h: &ElementSet, under: &ElementSet) -> ElementSet {
    let mut union = h.clone();
    for u in under {
        for e in h {
            union.insert(g.conj(e, u));
        }
    }
    generated_subgroup(g, union.iter())
}

/// `[a, b] = ⟨[x, y] : x ∈ a, y ∈ b⟩`.
pub fn commutator_subgroup(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut comms = BitSet::new(g.order());
    for x in a {
        for y in b {
            comms.insert(g.commutator(x, y));
        }
    }
    generated_subgroup(g, comms.iter())
}

/// `[x, b] = ⟨[x, y] : y ∈ b⟩` for a single element `x`.
pub fn element_commutator(g: &GroupTable, x: Elem, b: &ElementSet) -> ElementSet {
    generated_subgroup(g, b.iter().map(|y| g.commutator(x, y)))
}

pub fn derived_subgroup(g: &GroupTable, a: &ElementSet) -> ElementSet {
    commutator_subgroup(g, a, a)
}

/// `{xy : x ∈ a, y ∈ b}`.
pub fn product_set(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = BitSet::new(g.order());
    for x in a {
        for y in b {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// `ab = ba` as sets. When it holds the product is a subgroup.
pub fn permutes(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> bool {
    let ab = product_set(g, a, b);
    let holds = ab == product_set(g, b, a);
    debug_assert!(!holds || is_subgroup_set(g, &ab));
    holds
}

/// True iff `h^x = h` for every `x ∈ within`.
pub fn is_normal_in(g: &GroupTable, h: &ElementSet, within: &ElementSet) -> bool {
    within
        .iter()
        .all(|x| h.iter().all(|e| h.contains(g.conj(e, x))))
}

pub fn is_normal(g: &GroupTable, h: &ElementSet) -> bool {
    is_normal_in(g, h, &whole(g))
}

/// Follows `G ⊵ ⟨h^G⟩ ⊵ ⟨h^⟨h^G⟩⟩ ⊵ …` until it stabilises; `h` is subnormal
/// iff the chain reaches it.
pub fn is_subnormal(g: &GroupTable, h: &ElementSet) -> bool {
    is_subnormal_in(g, h, &whole(g))
}

pub fn is_subnormal_in(g: &GroupTable, h: &ElementSet, within: &ElementSet) -> bool {
    let mut current = within.clone();
    loop {
        let next = relative_normal_closure(g, h, &current);
        if next == current {
            return next == *h;
        }
        current = next;
    }
}

/// Order of the subgroup generated by `s`.
pub fn subgroup_order(g: &GroupTable, s: &ElementSet) -> usize {
    generated_subgroup(g, s.iter()).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_from_spec, BuildConfig, GroupSpec};

    fn s3() -> GroupTable {
        build_from_spec(&GroupSpec::symmetric(3), &BuildConfig::default()).unwrap()
    }

    fn transpositions(g: &GroupTable) -> Vec<Elem> {
        g.elements().filter(|&e| g.element_order(e) == 2).collect()
    }

    #[test]
    fn generated_subgroup_edges() {
        let g = s3();
        assert_eq!(generated_subgroup(&g, []).len(), 1);
        assert_eq!(generated_subgroup(&g, g.elements()).len(), 6);
    }

    #[test]
    fn s3_products_and_permutation() {
        let g = s3();
        let t = transpositions(&g);
        let h = generated_subgroup(&g, [t[0]]);
        let k = generated_subgroup(&g, [t[1]]);
        let a3 = derived_subgroup(&g, &whole(&g));
        assert_eq!(a3.len(), 3);
        assert_eq!(product_set(&g, &h, &k).len(), 4);
        assert!(!permutes(&g, &h, &k));
        assert!(permutes(&g, &h, &a3));
        assert!(permutes(&g, &h, &h));
        assert_eq!(core(&g, &h).len(), 1);
        assert_eq!(normalizer(&g, &h), h);
        assert_eq!(normalizer(&g, &whole(&g)), whole(&g));
        assert_eq!(normal_closure(&g, &h).len(), 6);
        // closure of a transposition under the 3-cycles is all of S3
        assert_eq!(relative_normal_closure(&g, &h, &a3).len(), 6);
        assert_eq!(relative_normal_closure(&g, &h, &trivial(&g)), h);
        assert_eq!(relative_normal_closure(&g, &a3, &h), a3);
        assert!(is_subnormal(&g, &a3));
        assert!(!is_subnormal(&g, &h));
        assert!(is_subnormal(&g, &whole(&g)));
    }
}
