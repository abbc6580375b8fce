//! Checks over a direct product and its factors.

use sstgroups_core::arith::gcd;
use sstgroups_core::ClassId;

use super::util::solvable_in;
use super::{boxed, CheckContext, CheckId, TheoremCheck};
use crate::report::{ReportBuilder, Relation, TheoremReport};

pub(crate) fn checks() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        boxed(CheckId::G, &["bt-product"], bt_product),
        boxed(CheckId::H, &["sst-product"], sst_product),
    ]
}

fn bt_product(ctx: &CheckContext<'_>) -> TheoremReport {
    let b = ReportBuilder::new(CheckId::G.as_str(), ctx.name);
    if ctx.factors.len() < 2 {
        return b.not_applicable("group is not given as a direct product of at least two factors");
    }
    let mut b = b;
    let factors_bt = ctx.factors.iter().all(|f| solvable_in(f, ClassId::BT));
    let residual_orders: Vec<u64> = ctx
        .factors
        .iter()
        .map(|f| f.lattice().order(f.nilpotent_residual()) as u64)
        .collect();
    let mut coprime = true;
    for (i, &li) in residual_orders.iter().enumerate() {
        for (j, f) in ctx.factors.iter().enumerate() {
            if i != j && gcd(li, f.group().order() as u64) != 1 {
                coprime = false;
                b.note(format!("|L_{}| = {li} and |G_{}| = {} are not coprime", i + 1, j + 1, f.group().order()));
            }
        }
    }
    b.statement("product is a solvable BT-group", solvable_in(ctx.analysis, ClassId::BT));
    b.statement(
        "every factor is a solvable BT-group and (|L_i|, |G_j|) = 1 for i != j",
        factors_bt && coprime,
    );
    b.finish(Relation::Equivalent)
}

fn sst_product(ctx: &CheckContext<'_>) -> TheoremReport {
    let mut b = ReportBuilder::new(CheckId::H.as_str(), ctx.name);
    if ctx.factors.len() < 2 {
        return b.not_applicable("group is not given as a direct product of at least two factors");
    }
    let factors_sst = ctx.factors.iter().all(|f| solvable_in(f, ClassId::SST));
    let orders: Vec<u64> = ctx.factors.iter().map(|f| f.group().order() as u64).collect();
    let coprime = orders
        .iter()
        .enumerate()
        .all(|(i, &a)| orders[i + 1..].iter().all(|&c| gcd(a, c) == 1));
    b.statement(
        "every factor is a solvable SST-group and the factor orders are pairwise coprime",
        factors_sst && coprime,
    );
    if !(factors_sst && coprime) {
        return b.not_applicable("factors are not pairwise coprime solvable SST-groups");
    }
    b.statement("product is a solvable SST-group", solvable_in(ctx.analysis, ClassId::SST));
    b.finish(Relation::Implications)
}
