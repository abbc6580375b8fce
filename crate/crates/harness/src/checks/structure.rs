//! Class equivalences and implications over a single group.

use sstgroups_core::classes::{self, cyclic_prime_power_subgroups, prime_power_subgroups};
use sstgroups_core::permutability::ss_permutable_in_normalizer_pairs;
use sstgroups_core::series::{self, all_sylow_systems, frattini_in, generalized_fitting, system_normalizer_of};
use sstgroups_core::{ClassId, GroupAnalysis, PredicateId, SubgroupId, Via};

use super::util::{every, first_failure, primes_outside, solvable_in, SylowCompletion};
use super::{boxed, CheckContext, CheckId, TheoremCheck};
use crate::report::{ReportBuilder, Relation, StatementValue, TheoremReport};

use PredicateId::{NssPermutable as Nss, SsPermutable as Ss};

pub(crate) fn checks() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        boxed(CheckId::T1_1, &["bt", "t1.1"], bt_equivalences),
        boxed(CheckId::A, &["sc"], sst_is_sc),
        boxed(CheckId::B, &["pst-ss"], pst_via_subnormal),
        boxed(CheckId::C, &["pst-pairs"], pst_via_normalizers),
        boxed(CheckId::D, &["sst"], sst_equivalences),
        boxed(CheckId::E, &["frattini"], frattini_split),
        boxed(CheckId::F, &["sst-in-bt"], sst_inside_bt),
        boxed(CheckId::I, &["extension"], normal_extension),
        boxed(CheckId::C1_4, &["c1.4"], sst_is_bt),
        boxed(CheckId::C1_6, &["c1.6", "closure"], sst_closure),
        boxed(CheckId::C1_7, &["c1.7", "abnormal"], ss_or_abnormal),
        boxed(CheckId::KEGEL, &["kegel"], kegel),
    ]
}

fn builder(id: CheckId, ctx: &CheckContext<'_>) -> ReportBuilder {
    ReportBuilder::new(id.as_str(), ctx.name)
}

/// Statement over `subjects` with the first failure kept as evidence.
fn every_with_evidence(
    b: &mut ReportBuilder,
    an: &GroupAnalysis,
    label: &str,
    pred: PredicateId,
    subjects: impl IntoIterator<Item = SubgroupId>,
) -> bool {
    let failure = first_failure(an, pred, subjects);
    if let Some(h) = failure {
        b.evidence(an.lattice(), format!("{label}: fails for this subgroup ({pred})"), &[h]);
    }
    b.statement(label, failure.is_none());
    failure.is_none()
}

fn class_with_evidence(b: &mut ReportBuilder, an: &GroupAnalysis, label: &str, class: ClassId, via: Via) {
    let v = an.class_verdict(class, via);
    if let Some(cx) = v.counterexample {
        b.evidence(an.lattice(), format!("{label}: {cx:?}"), &counterexample_ids(cx));
    }
    b.statement(label, v.verdict);
}

fn counterexample_ids(cx: classes::ClassCounterexample) -> Vec<SubgroupId> {
    use classes::ClassCounterexample::*;
    match cx {
        Chain { inner, middle } => vec![inner, middle],
        Subgroup(h) => vec![h],
        SylowPair(a, b) => vec![a, b],
        Conjugation { .. } => vec![],
        ChiefFactor { top, bottom } => vec![bottom, top],
    }
}

fn gated(when: bool, value: impl FnOnce() -> bool) -> StatementValue {
    if when {
        value().into()
    } else {
        StatementValue::NotApplicable
    }
}

fn bt_equivalences(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let solvable = an.is_solvable();
    let mut b = builder(CheckId::T1_1, ctx);
    b.statement("(1) solvable BT-group", gated(solvable, || an.class_holds(ClassId::BT)));
    b.statement("(2) solvable SBT-group", gated(solvable, || an.class_holds(ClassId::SBT)));
    every_with_evidence(&mut b, an, "(3) every subgroup semipermutable", PredicateId::Semipermutable, l.ids());
    every_with_evidence(&mut b, an, "(4) every subgroup S-semipermutable", PredicateId::SSemipermutable, l.ids());
    let pp = prime_power_subgroups(l);
    every_with_evidence(
        &mut b,
        an,
        "(5) every prime power order subgroup semipermutable",
        PredicateId::Semipermutable,
        pp.iter().copied(),
    );
    every_with_evidence(
        &mut b,
        an,
        "(6) every prime power order subgroup S-semipermutable",
        PredicateId::SSemipermutable,
        pp.iter().copied(),
    );
    class_with_evidence(
        &mut b,
        an,
        "(7) solvable PST-group with commuting Sylow subgroups outside pi(L)",
        ClassId::BT,
        Via::Characterization,
    );
    b.finish(Relation::Equivalent)
}

fn sst_is_sc(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let sc = an.class_holds(ClassId::SC);
    let mut b = builder(CheckId::A, ctx);
    class_with_evidence(&mut b, an, "SST-group", ClassId::SST, Via::Bruteforce);
    b.statement("SC-group", sc);
    class_with_evidence(&mut b, an, "NSST-group", ClassId::NSST, Via::Bruteforce);
    b.statement("SC-group", sc);
    b.finish(Relation::Implications)
}

fn pst_via_subnormal(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let solvable = an.is_solvable();
    let subnormal: Vec<SubgroupId> = l.ids().filter(|&h| l.is_subnormal_in(h, l.whole())).collect();
    let fstar = generalized_fitting(l);
    let mut b = builder(CheckId::B, ctx);
    for (label, pred) in [
        ("(1) solvable, every subnormal subgroup SS-permutable", Ss),
        ("(2) solvable, every subnormal subgroup NSS-permutable", Nss),
    ] {
        if solvable {
            every_with_evidence(&mut b, an, label, pred, subnormal.iter().copied());
        } else {
            b.statement(label, false);
        }
    }
    every_with_evidence(&mut b, an, "(3) every subgroup of F*(G) SS-permutable", Ss, l.subgroups_of(fstar).iter());
    every_with_evidence(&mut b, an, "(4) every subgroup of F*(G) NSS-permutable", Nss, l.subgroups_of(fstar).iter());
    b.statement("(5) solvable PST-group", solvable_in(an, ClassId::PST));
    b.finish(Relation::Equivalent)
}

fn pst_via_normalizers(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = builder(CheckId::C, ctx);
    let mut all_ss = true;
    let mut all_nss = true;
    for p in series::pi(l.group()) {
        let pairs = ss_permutable_in_normalizer_pairs(an.cache(), p).expect("prime divisor");
        for pair in pairs {
            if all_ss && !pair.ss.verdict {
                all_ss = false;
                b.evidence(l, "SS-permutable in the normalizer fails (H, K, N_G(K))", &[pair.inner, pair.outer, pair.normalizer]);
            }
            if all_nss && !pair.nss.verdict {
                all_nss = false;
                b.evidence(l, "NSS-permutable in the normalizer fails (H, K, N_G(K))", &[pair.inner, pair.outer, pair.normalizer]);
            }
        }
    }
    b.statement("(1) H SS-permutable in N_G(K) for all p-subgroups H <= K", all_ss);
    b.statement("(2) H NSS-permutable in N_G(K) for all p-subgroups H <= K", all_nss);
    b.statement("(3) solvable PST-group", solvable_in(an, ClassId::PST));
    b.finish(Relation::Equivalent)
}

fn sst_equivalences(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = builder(CheckId::D, ctx);
    if !an.is_solvable() {
        return b.not_applicable("group is not solvable");
    }
    let mut b = b;
    class_with_evidence(&mut b, an, "(1) SST-group", ClassId::SST, Via::Bruteforce);
    class_with_evidence(&mut b, an, "(2) NSST-group", ClassId::NSST, Via::Bruteforce);
    every_with_evidence(&mut b, an, "(3) every subgroup SS-permutable", Ss, l.ids());
    every_with_evidence(&mut b, an, "(4) every subgroup NSS-permutable", Nss, l.ids());
    let pp = prime_power_subgroups(l);
    every_with_evidence(&mut b, an, "(5) every prime power order subgroup SS-permutable", Ss, pp.iter().copied());
    every_with_evidence(&mut b, an, "(6) every prime power order subgroup NSS-permutable", Nss, pp.iter().copied());
    let cyc = cyclic_prime_power_subgroups(l);
    every_with_evidence(&mut b, an, "(7) every cyclic prime power order subgroup SS-permutable", Ss, cyc.iter().copied());
    every_with_evidence(&mut b, an, "(8) every cyclic prime power order subgroup NSS-permutable", Nss, cyc.iter().copied());
    b.finish(Relation::Equivalent)
}

fn frattini_split(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = builder(CheckId::E, ctx);
    if !solvable_in(an, ClassId::SST) {
        return b.not_applicable("group is not a solvable SST-group");
    }
    let mut b = b;
    let phi_g = frattini_in(l, l.whole());
    let res = an.nilpotent_residual();
    let phi_l = frattini_in(l, res);
    let mut split = true;
    let mut disjoint = true;
    for system in all_sylow_systems(l) {
        let d = system_normalizer_of(l, &system);
        let phi_d = frattini_in(l, d);
        if l.meet_order(phi_l, phi_d) != 1 {
            disjoint = false;
            b.evidence(l, "Phi(L) and Phi(D) intersect nontrivially (L, D)", &[res, d]);
        }
        if l.join(phi_l, phi_d) != phi_g || l.product_order(phi_l, phi_d) != l.order(phi_g) {
            split = false;
            b.evidence(l, "Phi(G) differs from Phi(L)Phi(D) (Phi(G), L, D)", &[phi_g, res, d]);
        }
    }
    b.statement("Phi(L) and Phi(D) meet trivially for every system normalizer D", disjoint);
    b.statement("Phi(G) = Phi(L)Phi(D) for every system normalizer D", split);
    let q = an.quotient(phi_g).expect("Frattini subgroup is normal");
    let brute = q.analysis.class_verdict(ClassId::Complemented, Via::Bruteforce).verdict;
    let hall = q.analysis.class_verdict(ClassId::Complemented, Via::Characterization).verdict;
    b.statement("G/Phi(G) complemented", brute);
    b.statement("G/Phi(G) supersolvable with elementary abelian Sylow subgroups", hall);
    b.finish(Relation::AllTrue)
}

fn sst_inside_bt(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = builder(CheckId::F, ctx);
    if !solvable_in(an, ClassId::BT) {
        return b.not_applicable("group is not a solvable BT-group");
    }
    let mut b = b;
    let g = l.group();
    let res = an.nilpotent_residual();
    class_with_evidence(&mut b, an, "(1) SST-group", ClassId::SST, Via::Bruteforce);
    let mut subgroups_ok = true;
    let mut elements_ok = true;
    for p in primes_outside(l, res) {
        let completion = SylowCompletion::new(l, p, res);
        for h in l.ids().filter(|&h| l.is_p_subgroup(h, p)) {
            if subgroups_ok && completion.for_subgroup(h).is_none() {
                subgroups_ok = false;
                b.evidence(l, format!("no completing {p}-subgroup for this p-subgroup"), &[h]);
            }
        }
        for x in g.elements().filter(|&x| l.is_p_subgroup(l.id_generated_by([x]), p)) {
            if elements_ok && completion.for_element(x).is_none() {
                elements_ok = false;
                let cyc = l.id_generated_by([x]);
                b.evidence(l, format!("no completing {}-subgroup for the element {x}", completion.p()), &[cyc]);
            }
        }
    }
    b.statement("(2) every p-subgroup outside pi(L) completes to a Sylow subgroup with [P,<K_p^L>] <= O_p(G)", subgroups_ok);
    b.statement("(3) every p-element outside pi(L) completes to a Sylow subgroup with [x,<K_p^L>] <= O_p(G)", elements_ok);
    b.finish(Relation::Equivalent)
}

/// Whether `N` is a solvable PST-group and `G/N''` is a solvable group of
/// class `class`.
fn extension_condition(an: &GroupAnalysis, n: SubgroupId, class: ClassId) -> bool {
    let l = an.lattice();
    let g = l.group();
    if !series::is_solvable_set(g, l.set(n)) {
        return false;
    }
    let derived = series::derived_series_of(g, l.set(n));
    let second = derived.terms.get(2).unwrap_or_else(|| derived.last());
    let n2 = l.id_of(second).expect("derived subgroup");
    let q = an.quotient(n2).expect("characteristic in a normal subgroup");
    if !solvable_in(&q.analysis, class) {
        return false;
    }
    classes::is_transitive_class_in(an, PredicateId::SPermutable, n)
        .expect("S-permutability has a class")
        .verdict
        .is_true()
}

fn normal_extension(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = builder(CheckId::I, ctx);
    for (class, name) in [(ClassId::SST, "SST"), (ClassId::BT, "BT")] {
        let holds = solvable_in(an, class);
        let witnesses: Vec<SubgroupId> = l
            .normal_subgroups()
            .into_iter()
            .filter(|&n| extension_condition(an, n, class))
            .collect();
        if !holds {
            if let Some(&n) = witnesses.first() {
                b.evidence(l, format!("N satisfies the extension condition but G is not a solvable {name}-group"), &[n]);
            }
        }
        b.statement(&format!("G is a solvable {name}-group"), holds);
        b.statement(
            &format!("some normal N is a solvable PST-group with G/N'' a solvable {name}-group"),
            !witnesses.is_empty(),
        );
    }
    b.finish(Relation::Biconditionals)
}

fn sst_is_bt(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let b = builder(CheckId::C1_4, ctx);
    if !an.is_solvable() {
        return b.not_applicable("group is not solvable");
    }
    let mut b = b;
    b.statement("SST-group", an.class_holds(ClassId::SST));
    class_with_evidence(&mut b, an, "BT-group", ClassId::BT, Via::Bruteforce);
    b.finish(Relation::Implications)
}

fn sst_closure(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = builder(CheckId::C1_6, ctx);
    if !solvable_in(an, ClassId::SST) {
        return b.not_applicable("group is not a solvable SST-group");
    }
    let mut b = b;
    let bad_subgroup = l.ids().find(|&a| {
        !classes::is_transitive_class_in(an, Ss, a)
            .expect("SS-permutability has a class")
            .verdict
            .is_true()
    });
    if let Some(a) = bad_subgroup {
        b.evidence(l, "subgroup that is not an SST-group", &[a]);
    }
    b.statement("every subgroup is an SST-group", bad_subgroup.is_none());
    let bad_quotient = l.normal_subgroups().into_iter().find(|&n| {
        let q = an.quotient(n).expect("normal");
        !solvable_in(&q.analysis, ClassId::SST)
    });
    if let Some(n) = bad_quotient {
        b.evidence(l, "normal subgroup N with G/N not a solvable SST-group", &[n]);
    }
    b.statement("every quotient is a solvable SST-group", bad_quotient.is_none());
    b.finish(Relation::AllTrue)
}

fn ss_or_abnormal(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = builder(CheckId::C1_7, ctx);
    if !an.is_solvable() {
        return b.not_applicable("group is not solvable");
    }
    let mut b = b;
    class_with_evidence(&mut b, an, "(1) SST-group", ClassId::SST, Via::Bruteforce);
    for (label, pred) in [
        ("(2) every subgroup SS-permutable or abnormal", Ss),
        ("(3) every subgroup NSS-permutable or abnormal", Nss),
    ] {
        let failure = l
            .ids()
            .find(|&h| !an.holds_in_group(pred, h) && !an.holds_in_group(PredicateId::Abnormal, h));
        if let Some(h) = failure {
            b.evidence(l, format!("{label}: fails for this subgroup"), &[h]);
        }
        b.statement(label, failure.is_none());
    }
    b.finish(Relation::Equivalent)
}

fn kegel(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = builder(CheckId::KEGEL, ctx);
    let stray = l
        .ids()
        .find(|&h| an.holds_in_group(PredicateId::SPermutable, h) && !l.is_subnormal_in(h, l.whole()));
    if let Some(h) = stray {
        b.counterexample(l, "S-permutable subgroup that is not subnormal", &[h]);
    }
    b.statement("every S-permutable subgroup is subnormal", stray.is_none());
    let pst = an.class_holds(ClassId::PST);
    let subnormal_sp = every(
        an,
        PredicateId::SPermutable,
        l.ids().filter(|&h| l.is_subnormal_in(h, l.whole())),
    );
    b.statement("PST-group", pst);
    b.statement("every subnormal subgroup is S-permutable", subnormal_sp);
    b.finish_with(stray.is_none() && pst == subnormal_sp)
}
