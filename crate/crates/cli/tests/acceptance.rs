//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use sstgroups_cli::manifest::{embedded_file, standard_catalog};
use sstgroups_cli::report::{to_json, CatalogJson};
use sstgroups_cli::{parse_spec_file, run_manifest};
use sstgroups_core::{BuildConfig, ClassCounterexample, ClassId, GroupAnalysis, PredicateId, Verdict, Via};
use sstgroups_harness::catalog::build_analysis;
use sstgroups_harness::{build_entry, CheckId, Outcome, RunConfig};

type Criterion = Result<String, String>;
type Step<'a> = (&'static str, Box<dyn Fn() -> Criterion + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("took {t:?}, limit {limit:?}"))
}

fn analysis(file: &str) -> GroupAnalysis {
    let text = embedded_file(file).expect("catalog file");
    let spec = parse_spec_file(text).expect("spec parses").spec;
    std::sync::Arc::try_unwrap(build_analysis(&spec, &BuildConfig::default()).expect("builds"))
        .unwrap_or_else(|_| panic!("fresh analysis is unshared"))
}

fn sub(an: &GroupAnalysis, words: &[&str]) -> sstgroups_core::SubgroupId {
    let g = an.group();
    let elems: Vec<_> = words
        .iter()
        .map(|w| w.parse::<sstgroups_core::ElementWord>().unwrap().evaluate(g).unwrap())
        .collect();
    an.lattice().id_generated_by(elems)
}

/// Expectations recorded for `name` in the catalog run all matched.
fn catalog_facts(cat: &CatalogJson, name: &str) -> Result<usize, String> {
    let e = cat.entries.iter().find(|e| e.name == name).ok_or(format!("{name} missing from catalog"))?;
    let bad: Vec<_> = e.expectations.iter().filter(|x| !x.matches).map(|x| x.key.clone()).collect();
    ensure(bad.is_empty(), format!("{name}: catalog expectations mismatched: {bad:?}"))?;
    Ok(e.expectations.len())
}

fn ex1_2(cat: &CatalogJson) -> Criterion {
    let start = Instant::now();
    let an = analysis("Ex1_2.json");
    ensure(an.group().order() == 36, "order is not 36")?;
    let h = sub(&an, &["y", "w"]);
    let ssemi = an.holds_in_group(PredicateId::SSemipermutable, h);
    let ss = an.holds_in_group(PredicateId::SsPermutable, h);
    ensure(ssemi, "<y,w> is not S-semipermutable")?;
    ensure(!ss, "<y,w> is SS-permutable")?;
    within(start, Duration::from_secs(5))?;
    let n = catalog_facts(cat, "Ex1_2")?;
    Ok(format!("s_semipermutable=true ss_permutable=false, {n} catalog facts"))
}

fn ex1_3(cat: &CatalogJson) -> Criterion {
    let start = Instant::now();
    let an = analysis("Ex1_3.json");
    let l = an.lattice();
    ensure(l.len() == 59, format!("A5 has {} subgroups", l.len()))?;
    let a4 = sub(&an, &["u", "v"]);
    ensure(l.order(a4) == 12, "subject is not A4")?;
    let ss = an.in_group(PredicateId::SsPermutable, a4);
    ensure(ss.verdict, "A4 is not SS-permutable")?;
    let w = ss.witness.ok_or("no stored witness")?;
    ensure(l.order(w) == 5, format!("witness has order {}", l.order(w)))?;
    ensure(!an.holds_in_group(PredicateId::NssPermutable, a4), "A4 is NSS-permutable")?;
    ensure(!an.holds_in_group(PredicateId::Subnormal, a4), "A4 is subnormal")?;
    within(start, Duration::from_secs(30))?;
    let n = catalog_facts(cat, "Ex1_3")?;
    Ok(format!("59 subgroups, Sylow-5 witness, nss=false, subnormal=false, {n} catalog facts"))
}

fn ex1_5(cat: &CatalogJson) -> Criterion {
    let start = Instant::now();
    let an = analysis("Ex1_5.json");
    ensure(an.group().order() == 20, "order is not 20")?;
    for (class, want) in [(ClassId::PST, true), (ClassId::BT, true), (ClassId::SST, false)] {
        for via in [Via::Bruteforce, Via::Characterization] {
            let got = an.class_verdict(class, via).verdict;
            ensure(got == Verdict::from(want), format!("{class} via {} is {}", via.as_str(), got.as_str()))?;
        }
    }
    ensure(!an.holds_in_group(PredicateId::SsPermutable, sub(&an, &["y^2"])), "<y^2> is SS-permutable")?;
    ensure(an.nilpotent_residual() == sub(&an, &["x"]), "nilpotent residual is not <x>")?;
    within(start, Duration::from_secs(5))?;
    let n = catalog_facts(cat, "Ex1_5")?;
    Ok(format!("PST=BT=true SST=false, <y^2> not SS, residual <x>, {n} catalog facts"))
}

fn ex1_8(cat: &CatalogJson) -> Criterion {
    let start = Instant::now();
    let text = embedded_file("Ex1_8.json").unwrap();
    let spec = parse_spec_file(text).map_err(|e| e.to_string())?.spec;
    let built = build_entry(&spec, &BuildConfig::default()).map_err(|e| e.to_string())?;
    let an = &built.analysis;
    ensure(an.group().order() == 60, "order is not 60")?;
    ensure(built.factors.len() == 2, "expected two direct factors")?;
    for f in &built.factors {
        ensure(f.class_holds(ClassId::SST), "a factor is not SST")?;
    }
    ensure(!an.class_holds(ClassId::SST), "G is SST")?;
    let zw = sub(an, &["z w"]);
    ensure(!an.holds_in_group(PredicateId::SsPermutable, zw), "<zw> is SS-permutable")?;
    let c = an.class_verdict(ClassId::SST, Via::Characterization);
    ensure(
        c.counterexample == Some(ClassCounterexample::Subgroup(zw)),
        format!("counterexample is {:?}", c.counterexample),
    )?;
    ensure(an.class_holds(ClassId::BT), "G is not BT")?;
    within(start, Duration::from_secs(60))?;
    let mut n = catalog_facts(cat, "Ex1_8")?;
    n += catalog_facts(cat, "Ex1_8_G1")? + catalog_facts(cat, "Ex1_8_G2")?;
    Ok(format!("SST(G1)=SST(G2)=true, SST(G)=false at <zw>, BT=true, {n} catalog facts"))
}

struct Run {
    cat: CatalogJson,
    elapsed: Duration,
}

fn verdict(cat: &CatalogJson, name: &str, class: ClassId) -> Option<bool> {
    let e = cat.entries.iter().find(|e| e.name == name)?;
    e.group.as_ref()?.class_verdicts.get(class)?.as_bool()
}

/// Checks `id` passes on every entry; returns (applicable, total).
fn all_pass(cat: &CatalogJson, id: CheckId) -> Result<(usize, usize), String> {
    let mut applicable = 0;
    let mut total = 0;
    for e in &cat.entries {
        for c in e.checks.iter().filter(|c| c.theorem_id == id.as_str()) {
            total += 1;
            ensure(c.pass, format!("{id} fails on {}", e.name))?;
            ensure(c.counterexamples.is_empty(), format!("{id} reports counterexamples on {}", e.name))?;
            if c.outcome != Outcome::NotApplicable {
                applicable += 1;
            }
        }
    }
    ensure(total == cat.entries.len(), format!("{id} ran on {total} of {} entries", cat.entries.len()))?;
    Ok((applicable, total))
}

fn solvable_entries(cat: &CatalogJson) -> Vec<(&str, usize)> {
    cat.entries
        .iter()
        .filter(|e| verdict(cat, &e.name, ClassId::Solvable) == Some(true))
        .map(|e| (e.name.as_str(), e.group.as_ref().unwrap().order))
        .collect()
}

fn theorem_d(run: &Run) -> Criterion {
    let (applicable, _) = all_pass(&run.cat, CheckId::D)?;
    let solvable = solvable_entries(&run.cat);
    let small = solvable.iter().filter(|(_, o)| *o <= 210).count();
    ensure(small >= 20, format!("only {small} solvable groups of order <= 210"))?;
    ensure(applicable == solvable.len(), format!("D applicable on {applicable}, solvable {}", solvable.len()))?;
    ensure(run.elapsed < Duration::from_secs(15 * 60), format!("catalog took {:?}", run.elapsed))?;
    Ok(format!("{applicable} solvable groups agree, max order {}, run {:.1?}", solvable.iter().map(|s| s.1).max().unwrap_or(0), run.elapsed))
}

fn theorem_1_1(run: &Run) -> Criterion {
    let (applicable, total) = all_pass(&run.cat, CheckId::T1_1)?;
    ensure(applicable >= solvable_entries(&run.cat).len(), "not exercised on every solvable group")?;
    Ok(format!("{applicable}/{total} groups, zero disagreements"))
}

fn theorem_a(run: &Run) -> Criterion {
    all_pass(&run.cat, CheckId::A)?;
    for name in ["A5", "S4", "S5"] {
        ensure(verdict(&run.cat, name, ClassId::SST).is_some(), format!("{name} has no SST verdict"))?;
    }
    for e in &run.cat.entries {
        let sst = verdict(&run.cat, &e.name, ClassId::SST);
        let sc = verdict(&run.cat, &e.name, ClassId::SC);
        ensure(!(sst == Some(true) && sc == Some(false)), format!("{} is SST but not SC", e.name))?;
    }
    Ok(format!("no SST group outside SC among {} groups", run.cat.entries.len()))
}

fn theorems_b_c(run: &Run) -> Criterion {
    let (b, _) = all_pass(&run.cat, CheckId::B)?;
    let (c, _) = all_pass(&run.cat, CheckId::C)?;
    ensure(b >= 5, format!("B exercised on {b} groups"))?;
    ensure(c >= 5, format!("C exercised on {c} groups"))?;
    Ok(format!("B agrees on {b} groups, C on {c}"))
}

fn theorem_e(run: &Run) -> Criterion {
    let (applicable, _) = all_pass(&run.cat, CheckId::E)?;
    let sst_solvable = run
        .cat
        .entries
        .iter()
        .filter(|e| verdict(&run.cat, &e.name, ClassId::Solvable) == Some(true) && verdict(&run.cat, &e.name, ClassId::SST) == Some(true))
        .count();
    ensure(applicable == sst_solvable, format!("E applicable on {applicable}, solvable SST {sst_solvable}"))?;
    for e in &run.cat.entries {
        for c in e.checks.iter().filter(|c| c.theorem_id == "E" && c.outcome != Outcome::NotApplicable) {
            ensure(
                c.statements.iter().any(|s| s.label.contains("elementary abelian Sylow")),
                format!("E on {} lacks the complemented-quotient cross-check", e.name),
            )?;
        }
    }
    Ok(format!("{applicable} solvable SST groups, Frattini splitting and Hall cross-check hold"))
}

fn theorems_f_to_i(run: &Run) -> Criterion {
    let mut parts = Vec::new();
    for id in [CheckId::F, CheckId::G, CheckId::H, CheckId::I, CheckId::C1_4, CheckId::C1_6, CheckId::C1_7] {
        let (applicable, _) = all_pass(&run.cat, id)?;
        ensure(applicable > 0, format!("{id} never applicable"))?;
        parts.push(format!("{id}:{applicable}"));
    }
    Ok(parts.join(" "))
}

fn lemmas(run: &Run) -> Criterion {
    let mut parts = Vec::new();
    for id in [
        CheckId::L2_1,
        CheckId::L2_2,
        CheckId::L2_3,
        CheckId::L2_4,
        CheckId::L2_5,
        CheckId::L2_6,
        CheckId::L2_7,
        CheckId::L2_8,
        CheckId::L3_1,
        CheckId::KEGEL,
    ] {
        let (applicable, _) = all_pass(&run.cat, id)?;
        ensure(applicable > 0, format!("{id} never applicable"))?;
        parts.push(format!("{id}:{applicable}"));
    }
    Ok(format!("zero counterexamples; {}", parts.join(" ")))
}

fn oracles(run: &Run) -> Criterion {
    all_pass(&run.cat, CheckId::ORACLES)?;
    let mut powerset = 0;
    for e in &run.cat.entries {
        let g = e.group.as_ref().ok_or(format!("{} did not build", e.name))?;
        let report = e.checks.iter().find(|c| c.theorem_id == "ORACLES").unwrap();
        let stmt = report.statements.iter().find(|s| s.label.contains("powerset")).unwrap();
        if g.order <= 16 {
            ensure(stmt.value.as_bool() == Some(true), format!("powerset oracle not run on {}", e.name))?;
            powerset += 1;
        }
        let v = |c| g.class_verdicts.get(c).and_then(Verdict::as_bool);
        let both = v(ClassId::Solvable).zip(v(ClassId::SC)).map(|(a, b)| a && b);
        ensure(v(ClassId::Supersolvable) == both, format!("supersolvable != solvable and SC on {}", e.name))?;
    }
    Ok(format!("powerset oracle on {powerset} groups, O_p routes, supersolvable characterization and witness recheck everywhere"))
}

fn determinism(first: &CatalogJson, second: &CatalogJson) -> Criterion {
    let a = to_json(first);
    let b = to_json(second);
    ensure(a == b, "reports differ between worker counts")?;
    Ok(format!("{} bytes identical for jobs=1 and jobs=4", a.len()))
}

fn main() {
    let manifest = standard_catalog();
    let config = |jobs| RunConfig { jobs, checks: CheckId::ALL.to_vec(), ..RunConfig::default() };
    let start = Instant::now();
    let parallel = run_manifest(&manifest, &config(4));
    let elapsed = start.elapsed();
    let serial = run_manifest(&manifest, &config(1));
    let run = Run { cat: parallel, elapsed };

    let criteria: Vec<Step<'_>> = vec![
        ("Ex1_2 verdicts", Box::new(|| ex1_2(&run.cat))),
        ("Ex1_3 verdicts", Box::new(|| ex1_3(&run.cat))),
        ("Ex1_5 verdicts", Box::new(|| ex1_5(&run.cat))),
        ("Ex1_8 verdicts", Box::new(|| ex1_8(&run.cat))),
        ("D agreement on solvable groups", Box::new(|| theorem_d(&run))),
        ("T1_1 agreement", Box::new(|| theorem_1_1(&run))),
        ("A implication", Box::new(|| theorem_a(&run))),
        ("B and C agreement", Box::new(|| theorems_b_c(&run))),
        ("E and Hall cross-check", Box::new(|| theorem_e(&run))),
        ("F, G, H, I, C1_4, C1_6, C1_7", Box::new(|| theorems_f_to_i(&run))),
        ("L2_x, L3_1 and KEGEL", Box::new(|| lemmas(&run))),
        ("oracle equivalences", Box::new(|| oracles(&run))),
        ("determinism across worker counts", Box::new(|| determinism(&serial, &run.cat))),
    ];

    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("[PRIMARY] criterion {} ({title}): PASS ({detail})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("[PRIMARY] criterion {} ({title}): FAIL ({reason})", i + 1);
            }
        }
    }
    let total_mismatches = run.cat.mismatches;
    if total_mismatches > 0 {
        failed += 1;
        println!("[PRIMARY] catalog expectations: FAIL ({total_mismatches} mismatches)");
    } else {
        println!("[PRIMARY] catalog expectations: PASS (all recorded verdicts match)");
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() + 1 - failed, criteria.len() + 1);
    if failed > 0 {
        std::process::exit(1);
    }
}
