mod common;

use std::sync::Arc;

use common::*;
use sstgroups_core::classes::*;
use sstgroups_core::group::{BuildConfig, GroupSpec};
use sstgroups_core::permutability::{
    registry, ss_permutable_in_normalizer_pairs, PredicateId::*, WitnessChecker,
};
use sstgroups_core::{GroupAnalysis, GroupError, PredicateId, Refutation, SubgroupId};

fn analysis(spec: &GroupSpec) -> GroupAnalysis {
    GroupAnalysis::from_lattice(Arc::new(lattice(spec)), BuildConfig::default().order_cap)
}

fn sub(an: &GroupAnalysis, words: &[&str]) -> SubgroupId {
    an.lattice().id_generated_by(words_to_elems(an.group(), words))
}

#[test]
fn order_36_semipermutable_not_ss() {
    let an = analysis(&c3sq_klein());
    let h = sub(&an, &["y", "w"]);
    assert_eq!(an.lattice().order(h), 6);
    assert!(an.holds_in_group(SSemipermutable, h));
    let ss = an.in_group(SsPermutable, h);
    assert!(!ss.verdict);
    assert!(matches!(ss.refutation, Some(Refutation::SupplementSylow { .. })));
    assert!(WitnessChecker::new(an.lattice()).check(&ss));
}

#[test]
fn a4_in_a5_ss_not_nss() {
    let an = analysis(&a5_points());
    let l = an.lattice();
    assert_eq!(l.len(), 59);
    let a4 = sub(&an, &["u", "v"]);
    let ss = an.in_group(SsPermutable, a4);
    assert!(ss.verdict);
    let k = ss.witness.unwrap();
    assert!(l.sylows_in_for(l.whole(), 5).contains(&k));
    assert!(!an.holds_in_group(NssPermutable, a4));
    assert!(!an.holds_in_group(Subnormal, a4));
    assert!(!an.holds_in_group(SPermutable, a4));
    assert!(WitnessChecker::new(l).check(&ss));
}

#[test]
fn frobenius_20_bt_not_sst() {
    let an = analysis(&c5_c4());
    let y2 = sub(&an, &["y^2"]);
    assert!(!an.holds_in_group(SsPermutable, y2));
    assert!(an.class_verdict(ClassId::PST, Via::Bruteforce).verdict.is_true());
    assert!(an.class_verdict(ClassId::PST, Via::Characterization).verdict.is_true());
    assert!(an.class_verdict(ClassId::BT, Via::Bruteforce).verdict.is_true());
    assert!(an.class_verdict(ClassId::SBT, Via::Bruteforce).verdict.is_true());
    assert!(an.class_verdict(ClassId::BT, Via::Characterization).verdict.is_true());
    assert_eq!(an.class_verdict(ClassId::SST, Via::Bruteforce).verdict, Verdict::False);
    let c = an.class_verdict(ClassId::SST, Via::Characterization);
    assert_eq!(c.verdict, Verdict::False);
    assert_eq!(c.counterexample, Some(ClassCounterexample::Subgroup(y2)));
    assert_eq!(an.class_verdict(ClassId::NSST, Via::Bruteforce).verdict, Verdict::False);
    assert_eq!(an.lattice().set(an.nilpotent_residual()).len(), 5);
}

#[test]
fn s3_x_d10_bt_not_sst() {
    let g1 = analysis(&s3_xz());
    let g2 = analysis(&d10_yw());
    assert!(g1.class_holds(ClassId::SST));
    assert!(g2.class_holds(ClassId::SST));
    let an = analysis(&s3_x_d10());
    assert!(!an.class_holds(ClassId::SST));
    let zw = sub(&an, &["z w"]);
    let c = an.class_verdict(ClassId::SST, Via::Characterization);
    assert_eq!(c.counterexample, Some(ClassCounterexample::Subgroup(zw)));
    assert!(an.class_holds(ClassId::BT));
    assert!(an.class_verdict(ClassId::BT, Via::Characterization).verdict.is_true());
}

#[test]
fn s3_predicates() {
    let an = analysis(&GroupSpec::symmetric(3));
    let t = sub(&an, &["b"]);
    let a3 = sub(&an, &["a"]);
    assert!(!an.holds_in_group(SPermutable, t));
    assert!(an.holds_in_group(SSemipermutable, t));
    assert!(an.holds_in_group(TauQuasinormal, t));
    assert!(an.holds_in_group(Abnormal, t));
    assert!(!an.holds_in_group(Abnormal, a3));
    assert!(an.holds_in_group(Permutable, a3));
    let whole = an.lattice().whole();
    let v = an.in_group(NssPermutable, whole);
    assert_eq!(v.witness, Some(an.lattice().trivial()));
    assert!(an.holds_in_group(Abnormal, whole));
    assert!(an.holds_in_group(TauQuasinormal, whole));
    assert!(an.holds_in_group(SSemipermutable, whole));
    let t2 = an.lattice().conj(t, sub_elem(&an, "a"));
    assert!(!an.lattice().permutes(t, t2));
    assert!(an.lattice().permutes(t, a3));
    assert!(is_sst_characterization(&an).verdict.is_true());
    assert!(is_complemented(&an).verdict.is_true());
    let pairs = ss_permutable_in_normalizer_pairs(an.cache(), 2).unwrap();
    assert!(pairs.iter().all(|p| p.ss.verdict && p.nss.verdict));
    assert!(matches!(ss_permutable_in_normalizer_pairs(an.cache(), 6), Err(GroupError::NotPrime(6))));
    assert!(acts_by_power_automorphisms(an.lattice(), a3).unwrap());
    assert!(matches!(acts_by_power_automorphisms(an.lattice(), t), Err(GroupError::NotNormal)));
}

fn sub_elem(an: &GroupAnalysis, w: &str) -> usize {
    words_to_elems(an.group(), &[w])[0]
}

#[test]
fn d8_every_subgroup_s_permutable() {
    let an = analysis(&GroupSpec::dihedral(4));
    let l = an.lattice();
    for h in l.ids() {
        assert!(an.holds_in_group(SPermutable, h));
        assert!(an.holds_in_group(Subnormal, h));
        let v = an.in_group(NssPermutable, h);
        assert!(v.verdict);
    }
    let r = sub(&an, &["r"]);
    assert!(chief_factors_below_cyclic_and_g_isomorphic(l, r).unwrap());
}

#[test]
fn s4_pairs_and_classes() {
    let an = analysis(&GroupSpec::symmetric(4));
    let pairs = ss_permutable_in_normalizer_pairs(an.cache(), 2).unwrap();
    assert!(pairs.iter().any(|p| !p.ss.verdict));
    assert_eq!(is_pst_characterization(&an).verdict, Verdict::False);
    assert!(!an.class_holds(ClassId::SST));
    assert!(!an.class_holds(ClassId::PST));
    assert_eq!(an.class_verdict(ClassId::Supersolvable, Via::Bruteforce).verdict, Verdict::False);
    assert!(an.class_holds(ClassId::Solvable));
    assert!(!an.class_holds(ClassId::Nilpotent));
}

#[test]
fn a5_classes_and_characterizations() {
    let an = analysis(&GroupSpec::alternating(5));
    for c in [ClassId::Nilpotent, ClassId::Solvable, ClassId::Supersolvable] {
        assert!(!an.class_holds(c));
    }
    assert_eq!(is_pst_characterization(&an).verdict, Verdict::NotApplicable);
    assert_eq!(is_sst_characterization(&an).verdict, Verdict::NotApplicable);
    assert!(an.class_holds(ClassId::SC));
}

#[test]
fn abelian_groups_are_in_every_class() {
    let an = analysis(&GroupSpec::direct(vec![GroupSpec::cyclic(2), GroupSpec::cyclic(6)]));
    for c in [ClassId::T, ClassId::PT, ClassId::PST, ClassId::BT, ClassId::SBT, ClassId::SST, ClassId::NSST] {
        assert!(an.class_holds(c), "{c}");
    }
    assert!(!is_complemented(&analysis(&GroupSpec::cyclic(4))).verdict.is_true());
}

#[test]
fn power_automorphisms_order_36() {
    let an = analysis(&c3sq_klein());
    let n = sub(&an, &["x", "y"]);
    assert!(!acts_by_power_automorphisms(an.lattice(), n).unwrap());
    assert!(acts_by_power_automorphisms(an.lattice(), an.lattice().trivial()).unwrap());
}

#[test]
fn registry_aliases_and_unknown() {
    assert_eq!(registry().get("nss").unwrap().id(), NssPermutable);
    assert_eq!(registry().get("SS").unwrap().id(), SsPermutable);
    assert_eq!("tau".parse::<PredicateId>().unwrap(), TauQuasinormal);
    assert!("bogus".parse::<PredicateId>().is_err());
    assert_eq!(registry().names().count(), 10);
    assert!(matches!(ClassId::for_relation(Abnormal), Err(GroupError::UnknownRelation(_))));
}
