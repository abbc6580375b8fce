//! Auxiliary facts, each instantiated over every applicable tuple of
//! subgroups of one group.

use sstgroups_core::arith::p_part;
use sstgroups_core::classes::{chief_factors_below_cyclic_and_g_isomorphic, coprime, cyclic_prime_power_subgroups};
use sstgroups_core::series::{self, all_sylow_systems, fitting, generalized_fitting, o_p_in, system_normalizer_of};
use sstgroups_core::subgroups::derived_subgroup;
use sstgroups_core::{ClassId, PredicateId, SubgroupId, SubgroupLattice};

use super::util::{commutator_within, every, prime_of_p_group, primes_outside, solvable_in, valid_supplement, SylowCompletion};
use super::{boxed, CheckContext, CheckId, TheoremCheck};
use crate::report::{ReportBuilder, Relation, StatementValue, TheoremReport};

use PredicateId::{NssPermutable as Nss, SsPermutable as Ss};

pub(crate) fn checks() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        boxed(CheckId::L2_1, &["supplements"], supplement_facts),
        boxed(CheckId::L2_2, &["modules"], normal_p_subgroups),
        boxed(CheckId::L2_3, &["tau"], tau_in_fstar),
        boxed(CheckId::L2_4, &["cyclic-bt"], cyclic_bt),
        boxed(CheckId::L2_5, &["nilpotent-by-abelian"], ss_equals_nss),
        boxed(CheckId::L2_6, &["coprime-join"], coprime_joins),
        boxed(CheckId::L2_7, &["pst-facts"], pst_facts),
        boxed(CheckId::L2_8, &["commutator-criterion"], commutator_criterion),
        boxed(CheckId::L3_1, &["hypercenter"], hypercenter_lift),
    ]
}

fn tag(pred: PredicateId) -> &'static str {
    if pred == Nss {
        "NSS"
    } else {
        "SS"
    }
}

/// All `K ≤ G` that are SS- (or NSS-) permutable supplements of `S_h`.
fn valid_supplements(l: &SubgroupLattice, h: SubgroupId, pred: PredicateId) -> Vec<SubgroupId> {
    l.ids().filter(|&k| valid_supplement(l, h, k, l.whole(), pred == Nss)).collect()
}

/// Tracks one universally quantified statement, keeping its first failure.
struct Forall<'a> {
    label: String,
    ok: bool,
    instances: usize,
    failure: Option<(String, Vec<SubgroupId>)>,
    l: &'a SubgroupLattice,
}

impl<'a> Forall<'a> {
    fn new(l: &'a SubgroupLattice, label: impl Into<String>) -> Self {
        Forall { label: label.into(), ok: true, instances: 0, failure: None, l }
    }

    fn check(&mut self, holds: bool, describe: impl FnOnce() -> (String, Vec<SubgroupId>)) {
        self.instances += 1;
        if !holds && self.ok {
            self.ok = false;
            self.failure = Some(describe());
        }
    }

    fn record(self, b: &mut ReportBuilder) {
        if let Some((desc, ids)) = &self.failure {
            b.counterexample(self.l, format!("{}: {desc}", self.label), ids);
        }
        if self.instances == 0 {
            b.statement(&self.label, StatementValue::NotApplicable);
        } else {
            b.statement(&self.label, self.ok);
        }
    }
}

fn supplement_facts(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = ReportBuilder::new(CheckId::L2_1.as_str(), ctx.name);
    let whole = l.whole();
    let normals = l.normal_subgroups();
    let fit = fitting(l);
    let nilpotent_normals: Vec<SubgroupId> = normals.iter().copied().filter(|&n| l.contains(fit, n)).collect();
    let class_of: Vec<usize> = {
        let mut v = vec![0; l.len()];
        for (c, members) in l.conjugacy_classes().iter().enumerate() {
            for &m in members {
                v[m] = c;
            }
        }
        v
    };
    let g_order = l.group().order() as u64;
    for pred in [Ss, Nss] {
        let t = tag(pred);
        let holders: Vec<SubgroupId> = l.ids().filter(|&h| an.holds_in_group(pred, h)).collect();
        let supplements: Vec<Vec<SubgroupId>> = holders.iter().map(|&h| valid_supplements(l, h, pred)).collect();

        let mut restrict = Forall::new(l, format!("(1) {t}: H stays {t}-permutable in every L with H <= L"));
        for &h in &holders {
            for m in l.overgroups_of(h).iter() {
                restrict.check(an.holds(pred, m, h), || ("fails in L (H, L)".into(), vec![h, m]));
            }
        }

        let mut image = Forall::new(l, format!("(2) {t}: HN/N is {t}-permutable in G/N"));
        let mut preimage = Forall::new(l, format!("(3) {t}: L/N {t}-permutable in G/N gives L {t}-permutable in G"));
        for &n in &normals {
            let q = an.quotient(n).expect("normal subgroup");
            for &h in &holders {
                let img = q.image(an, h);
                image.check(q.analysis.holds_in_group(pred, img), || ("image fails (H, N)".into(), vec![h, n]));
            }
            let ql = q.analysis.lattice();
            for s in ql.ids().filter(|&s| q.analysis.holds_in_group(pred, s)) {
                let full = q.preimage(an, s);
                preimage.check(an.holds_in_group(pred, full), || ("preimage fails (L, N)".into(), vec![full, n]));
            }
        }

        let mut semi = Forall::new(l, format!("(4) {t}: H is S-semipermutable"));
        let mut in_fitting = Forall::new(l, format!("(5) {t}: H <= F(G) is S-permutable"));
        let mut conjugates = Forall::new(l, format!("(6) {t}: every conjugate of a supplement is a supplement"));
        let mut nilpotent = Forall::new(l, format!("(7) {t}: NK is a supplement for nilpotent normal N"));
        let mut sylow = Forall::new(l, format!("(8) {t}: HK_p is a Sylow p-subgroup for p-subgroups H"));
        for (&h, supps) in holders.iter().zip(&supplements) {
            semi.check(an.holds_in_group(PredicateId::SSemipermutable, h), || ("not S-semipermutable".into(), vec![h]));
            if l.contains(fit, h) {
                in_fitting.check(an.holds_in_group(PredicateId::SPermutable, h), || ("not S-permutable".into(), vec![h]));
            }
            for &k in supps {
                for &c in &l.conjugacy_classes()[class_of[k]] {
                    conjugates.check(valid_supplement(l, h, c, whole, pred == Nss), || {
                        ("conjugate supplement fails (H, K, K^x)".into(), vec![h, k, c])
                    });
                }
                for &n in &nilpotent_normals {
                    let nk = l.join(n, k);
                    nilpotent.check(valid_supplement(l, h, nk, whole, pred == Nss), || {
                        ("NK fails (H, K, N)".into(), vec![h, k, n])
                    });
                }
            }
            if let Some(p) = prime_of_p_group(l, h) {
                let target = p_part(g_order, p) as usize;
                for &k in supps {
                    for kp in l.sylows_in_any(k, p) {
                        let ok = l.permutes(h, kp) && l.product_order(h, kp) == target;
                        sylow.check(ok, || ("HK_p is not Sylow (H, K, K_p)".into(), vec![h, k, kp]));
                    }
                }
            }
        }
        for f in [restrict, image, preimage, semi, in_fitting, conjugates, nilpotent, sylow] {
            f.record(&mut b);
        }
    }
    b.finish(Relation::AllTrue)
}

fn normal_p_subgroups(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = ReportBuilder::new(CheckId::L2_2.as_str(), ctx.name);
    for n in l.normal_subgroups() {
        let Some(p) = prime_of_p_group(l, n) else { continue };
        let modules = chief_factors_below_cyclic_and_g_isomorphic(l, n).expect("normal p-subgroup");
        let all_sp = every(an, PredicateId::SPermutable, l.subgroups_of(n).iter());
        if modules != all_sp {
            b.evidence(l, format!("normal {p}-subgroup where the two sides differ"), &[n]);
        }
        let name = format!("normal {p}-subgroup #{n} of order {}", l.order(n));
        b.statement(&format!("{name}: chief factors below are cyclic and G-isomorphic"), modules);
        b.statement(&format!("{name}: all its subgroups are S-permutable"), all_sp);
    }
    b.finish(Relation::Biconditionals)
}

fn tau_in_fstar(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = ReportBuilder::new(CheckId::L2_3.as_str(), ctx.name);
    let fstar = generalized_fitting(l);
    let failure = l
        .subgroups_of(fstar)
        .iter()
        .find(|&h| !an.holds_in_group(PredicateId::TauQuasinormal, h));
    if let Some(h) = failure {
        b.evidence(l, "subgroup of F*(G) that is not tau-quasinormal", &[h]);
    }
    b.statement("every subgroup of F*(G) is tau-quasinormal", failure.is_none());
    b.statement("solvable PST-group", solvable_in(an, ClassId::PST));
    b.finish(Relation::Equivalent)
}

fn cyclic_bt(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = ReportBuilder::new(CheckId::L2_4.as_str(), ctx.name);
    if !an.is_solvable() {
        return b.not_applicable("group is not solvable");
    }
    let mut b = b;
    b.statement("BT-group", an.class_holds(ClassId::BT));
    b.statement(
        "every cyclic prime power order subgroup is S-semipermutable",
        every(an, PredicateId::SSemipermutable, cyclic_prime_power_subgroups(l)),
    );
    b.finish(Relation::Equivalent)
}

fn ss_equals_nss(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = ReportBuilder::new(CheckId::L2_5.as_str(), ctx.name);
    let g = l.group();
    if !derived_subgroup(g, l.set(l.whole())).is_subset(l.set(fitting(l))) {
        return b.not_applicable("G/F(G) is not abelian");
    }
    let mut b = b;
    let mut ss_only = Forall::new(l, "every SS-permutable subgroup is NSS-permutable");
    let mut nss_only = Forall::new(l, "every NSS-permutable subgroup is SS-permutable");
    for h in l.ids() {
        let (ss, nss) = (an.holds_in_group(Ss, h), an.holds_in_group(Nss, h));
        ss_only.check(!ss || nss, || ("SS-permutable only".into(), vec![h]));
        nss_only.check(!nss || ss, || ("NSS-permutable only".into(), vec![h]));
    }
    ss_only.record(&mut b);
    nss_only.record(&mut b);
    b.finish(Relation::AllTrue)
}

fn coprime_joins(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let mut b = ReportBuilder::new(CheckId::L2_6.as_str(), ctx.name);
    let solvable = an.is_solvable();
    for pred in [Ss, Nss] {
        let t = tag(pred);
        let holders: Vec<SubgroupId> = l
            .ids()
            .filter(|&h| l.order(h) > 1 && an.holds_in_group(pred, h))
            .collect();
        let mut joins = Forall::new(l, format!("<T,S> is {t}-permutable for coprime {t}-permutable T, S"));
        for (i, &t_id) in holders.iter().enumerate() {
            for &s_id in &holders[i + 1..] {
                if !coprime(l, t_id, s_id) {
                    continue;
                }
                let prime_power = prime_of_p_group(l, t_id).is_some() && prime_of_p_group(l, s_id).is_some();
                if !solvable && !prime_power {
                    continue;
                }
                let j = l.join(t_id, s_id);
                joins.check(an.holds_in_group(pred, j), || ("join fails (T, S, <T,S>)".into(), vec![t_id, s_id, j]));
            }
        }
        joins.record(&mut b);
    }
    b.finish(Relation::AllTrue)
}

fn pst_facts(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = ReportBuilder::new(CheckId::L2_7.as_str(), ctx.name);
    if !solvable_in(an, ClassId::PST) {
        return b.not_applicable("group is not a solvable PST-group");
    }
    let mut b = b;
    let g = l.group();
    let mut derived = Forall::new(l, "(1) D' is normal for every system normalizer D");
    for system in all_sylow_systems(l) {
        let d = system_normalizer_of(l, &system);
        let dd = l.id_of(&derived_subgroup(g, l.set(d))).expect("derived subgroup");
        derived.check(l.is_normal(dd), || ("D' not normal (D, D')".into(), vec![d, dd]));
    }
    derived.record(&mut b);
    let mut commutators = Forall::new(l, "(2) [H,K_p] <= O_p(G) for SS-permutable p-subgroups H with supplement K");
    for p in series::pi(g) {
        let op = o_p_in(l, l.whole(), p).expect("prime");
        for h in l.ids().filter(|&h| l.order(h) > 1 && l.is_p_subgroup(h, p) && an.holds_in_group(Ss, h)) {
            for k in valid_supplements(l, h, Ss) {
                for kp in l.sylows_in_any(k, p) {
                    commutators.check(commutator_within(l, h, kp, op), || {
                        ("commutator escapes O_p(G) (H, K, K_p)".into(), vec![h, k, kp])
                    });
                }
            }
        }
    }
    commutators.record(&mut b);
    b.finish(Relation::AllTrue)
}

fn commutator_criterion(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = ReportBuilder::new(CheckId::L2_8.as_str(), ctx.name);
    if !solvable_in(an, ClassId::BT) {
        return b.not_applicable("group is not a solvable BT-group");
    }
    let mut b = b;
    let res = an.nilpotent_residual();
    let mut criterion = Forall::new(l, "p-subgroups outside pi(L) with a completing K_p are SS-permutable");
    for p in primes_outside(l, res) {
        let completion = SylowCompletion::new(l, p, res);
        for h in l.ids().filter(|&h| l.is_p_subgroup(h, p)) {
            if let Some(k) = completion.for_subgroup(h) {
                criterion.check(an.holds_in_group(Ss, h), || ("not SS-permutable (H, K_p)".into(), vec![h, k]));
            }
        }
    }
    criterion.record(&mut b);
    b.finish(Relation::AllTrue)
}

fn hypercenter_lift(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let b = ReportBuilder::new(CheckId::L3_1.as_str(), ctx.name);
    if !solvable_in(an, ClassId::PST) {
        return b.not_applicable("group is not a solvable PST-group");
    }
    let mut b = b;
    let z = l.id_of(&series::hypercenter(l.group())).expect("hypercenter");
    let q = an.quotient(z).expect("hypercenter is normal");
    for (class, name) in [(ClassId::SST, "SST"), (ClassId::BT, "BT")] {
        let upstairs = solvable_in(an, class);
        let downstairs = solvable_in(&q.analysis, class);
        if downstairs && !upstairs {
            b.evidence(l, format!("G/Z is a solvable {name}-group but G is not (Z)"), &[z]);
        }
        b.statement(&format!("G/Z_inf(G) is a solvable {name}-group"), downstairs);
        b.statement(&format!("G is a solvable {name}-group"), upstairs);
    }
    b.finish(Relation::Implications)
}
