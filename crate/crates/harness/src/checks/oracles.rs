//! Independent recomputations of lattice and series data, plus a recheck of
//! every stored supplement witness.

use sstgroups_core::permutability::WitnessChecker;
use sstgroups_core::series::{self, fitting, fitting_by_search, nilpotent_residual_by_search};
use sstgroups_core::{ClassId, GroupTable, PredicateId, Via};

use super::{boxed, CheckContext, CheckId, TheoremCheck};
use crate::report::{ReportBuilder, Relation, StatementValue, TheoremReport};

/// Largest order for the powerset comparison.
pub const POWERSET_LIMIT: usize = 16;

pub(crate) fn checks() -> Vec<Box<dyn TheoremCheck>> {
    vec![boxed(CheckId::ORACLES, &["oracle"], oracles)]
}

/// Every subset containing the identity and closed under the product, as
/// sorted element masks.
pub fn powerset_subgroups(g: &GroupTable) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 32, "powerset oracle needs at most 32 elements");
    let id = g.identity();
    let mut out = Vec::new();
    for rest in 0u64..(1u64 << (n - 1)) {
        // spread the n-1 free bits around the identity's position
        let low = rest & ((1u64 << id) - 1);
        let high = (rest >> id) << (id + 1);
        let mask = (low | high | (1u64 << id)) as u32;
        let closed = (0..n).filter(|&a| mask >> a & 1 == 1).all(|a| {
            (0..n).filter(|&b| mask >> b & 1 == 1).all(|b| mask >> g.mul(a, b) & 1 == 1)
        });
        if closed {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

fn oracles(ctx: &CheckContext<'_>) -> TheoremReport {
    let an = ctx.analysis;
    let l = an.lattice();
    let g = l.group();
    let mut b = ReportBuilder::new(CheckId::ORACLES.as_str(), ctx.name);

    if g.order() <= POWERSET_LIMIT {
        let mut ours: Vec<u32> = l
            .sets()
            .iter()
            .map(|s| s.iter().fold(0u32, |m, e| m | 1 << e))
            .collect();
        ours.sort_unstable();
        let agree = ours == powerset_subgroups(g);
        if !agree {
            b.counterexample(l, "lattice differs from the powerset filter", &[]);
        }
        b.statement("lattice equals the powerset filter", agree);
    } else {
        b.statement("lattice equals the powerset filter", StatementValue::NotApplicable);
    }

    let mut op_ok = true;
    for p in series::pi(g) {
        let direct = series::o_p(l, p).expect("prime");
        let search = series::o_p_by_search(l, p).expect("prime");
        let residual = series::o_p_residual(g, p).expect("prime");
        let residual_search = series::o_p_residual_by_search(l, p).expect("prime");
        if direct != search || residual != residual_search {
            op_ok = false;
            b.note(format!("O_p routes differ at p = {p}"));
        }
    }
    b.statement("O_p and O^p agree across both routes", op_ok);

    let fit_ok = fitting(l) == fitting_by_search(l);
    let res_ok = l.set(an.nilpotent_residual()) == &nilpotent_residual_by_search(l).expect("quotients build");
    b.statement("Fitting subgroup agrees across both routes", fit_ok);
    b.statement("nilpotent residual agrees across both routes", res_ok);

    for class in [ClassId::Supersolvable, ClassId::Complemented] {
        let brute = an.class_verdict(class, Via::Bruteforce).verdict;
        let other = an.class_verdict(class, Via::Characterization).verdict;
        b.statement(&format!("{class} agrees with its characterization"), brute == other);
    }
    if an.is_solvable() {
        for class in [ClassId::PST, ClassId::BT, ClassId::SBT, ClassId::SST, ClassId::NSST] {
            let brute = an.class_verdict(class, Via::Bruteforce).verdict;
            let other = an.class_verdict(class, Via::Characterization).verdict;
            b.statement(&format!("{class} agrees with its characterization"), brute == other);
        }
    }

    let mut checker = WitnessChecker::new(l);
    let mut rechecked = true;
    for pred in [PredicateId::SsPermutable, PredicateId::NssPermutable] {
        for h in l.ids() {
            let v = an.in_group(pred, h);
            if !checker.check(&v) {
                rechecked = false;
                b.counterexample(l, format!("stored {pred} evidence does not recheck"), &[h]);
            }
        }
    }
    b.statement("every stored SS/NSS witness and refutation rechecks", rechecked);
    b.finish(Relation::AllTrue)
}
