mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use sstgroups_core::group::{quotient, GroupSpec};
use sstgroups_core::permutability::{PredicateId::*, WitnessChecker};
use sstgroups_core::series;
use sstgroups_core::subgroups::{is_subgroup_set, product_set};
use sstgroups_core::{GroupAnalysis, SubgroupLattice};

fn small_group() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1usize..=12).prop_map(GroupSpec::cyclic),
        (2usize..=6).prop_map(GroupSpec::dihedral),
        Just(GroupSpec::symmetric(3)),
        Just(GroupSpec::alternating(4)),
        Just(dic3()),
        Just(q8()),
        Just(c7_c3()),
        Just(c5_c4()),
    ];
    (leaf.clone(), proptest::option::of(leaf)).prop_filter_map("order cap", |(a, b)| match b {
        None => Some(a),
        Some(b) => {
            let spec = GroupSpec::direct(vec![a, b]);
            let g = sstgroups_core::group::build_from_spec(&spec, &Default::default()).ok()?;
            (g.order() <= 48).then_some(spec)
        }
    })
}

fn analysis(spec: &GroupSpec) -> GroupAnalysis {
    GroupAnalysis::from_lattice(Arc::new(lattice(spec)), 360)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lattice_invariants(spec in small_group()) {
        let l = lattice(&spec);
        let g = l.group();
        prop_assert_eq!(l.order(l.trivial()), 1);
        prop_assert_eq!(l.order(l.whole()), g.order());
        for i in l.ids() {
            prop_assert!(is_subgroup_set(g, l.set(i)));
            prop_assert_eq!(g.order() % l.order(i), 0);
            for x in g.elements() {
                prop_assert!(l.conj(i, x) < l.len());
            }
        }
        for (p, list) in l.sylows_in(l.whole()) {
            prop_assert_eq!(list.len() as u64 % p, 1);
            prop_assert_eq!(g.order() % list.len(), 0);
        }
        for i in l.ids() {
            for j in l.ids() {
                if l.permutes(i, j) {
                    prop_assert!(is_subgroup_set(g, &product_set(g, l.set(i), l.set(j))));
                }
            }
        }
    }

    #[test]
    fn predicate_implications(spec in small_group()) {
        let an = analysis(&spec);
        let l = an.lattice();
        let fit = series::fitting(l);
        let mut checker = WitnessChecker::new(l);
        for h in l.ids() {
            let v = |p| an.holds_in_group(p, h);
            if v(Normal) { prop_assert!(v(Permutable) && v(NssPermutable)); }
            if v(Permutable) { prop_assert!(v(SPermutable)); }
            if v(NssPermutable) { prop_assert!(v(SsPermutable)); }
            if v(SsPermutable) { prop_assert!(v(SSemipermutable) && v(TauQuasinormal)); }
            if v(Semipermutable) { prop_assert!(v(SSemipermutable)); }
            if v(SPermutable) { prop_assert!(v(Subnormal)); }
            if v(SsPermutable) && l.contains(fit, h) { prop_assert!(v(SPermutable)); }
            prop_assert!(checker.check(&an.in_group(SsPermutable, h)));
            prop_assert!(checker.check(&an.in_group(NssPermutable, h)));
        }
    }

    #[test]
    fn quotient_is_homomorphism(spec in small_group()) {
        let l = lattice(&spec);
        let g = l.group();
        for n in l.normal_subgroups() {
            let (q, proj) = quotient(g, l.set(n)).unwrap();
            prop_assert_eq!(q.order() * l.order(n), g.order());
            for a in g.elements() {
                for b in g.elements() {
                    prop_assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
                }
            }
        }
    }

    #[test]
    fn series_invariants(spec in small_group()) {
        let l = lattice(&spec);
        let g = l.group();
        let f = series::fitting(&l);
        prop_assert!(l.is_normal(f));
        prop_assert!(series::is_nilpotent_set(g, l.set(f)));
        prop_assert_eq!(f, series::fitting_by_search(&l));
        let fs = series::generalized_fitting(&l);
        prop_assert!(l.contains(fs, f));
        if series::is_solvable(g) {
            prop_assert_eq!(fs, f);
            let d = series::system_normalizer(&l).unwrap();
            prop_assert!(l.contains(d, l.id_of(&series::hypercenter(g)).unwrap()));
        }
        prop_assert_eq!(series::nilpotent_residual(g), series::nilpotent_residual_by_search(&l).unwrap());
        for t in series::derived_series(g).terms.iter().chain(series::upper_central_series(g).terms.iter()) {
            prop_assert!(l.is_normal(l.id_of(t).unwrap()));
        }
    }

    #[test]
    fn class_agreement_on_solvable(spec in small_group()) {
        use sstgroups_core::classes::{ClassId::*, Via};
        let an = analysis(&spec);
        prop_assume!(an.is_solvable());
        let b = |c| an.class_verdict(c, Via::Bruteforce).verdict;
        let ch = |c| an.class_verdict(c, Via::Characterization).verdict;
        prop_assert_eq!(b(PST), ch(PST));
        prop_assert_eq!(b(BT), ch(BT));
        prop_assert_eq!(b(SBT), ch(BT));
        prop_assert_eq!(b(SST), ch(SST));
        prop_assert_eq!(b(NSST), ch(SST));
        prop_assert_eq!(b(Complemented), ch(Complemented));
    }
}

#[test]
fn lattice_from_cap_error() {
    let g = build(&GroupSpec::symmetric(4));
    assert!(SubgroupLattice::with_cap(Arc::new(g), 10).is_err());
}
