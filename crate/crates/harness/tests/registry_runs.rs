use sstgroups_core::GroupSpec;
use sstgroups_harness::{registry, run_catalog, run_catalog_with, CatalogEntry, CheckId, HarnessError, RunConfig};

#[test]
fn every_id_is_registered_once() {
    let ids: Vec<CheckId> = registry().ids().collect();
    assert_eq!(ids.len(), CheckId::ALL.len());
    for id in CheckId::ALL {
        assert_eq!(registry().by_id(id).id(), id);
        assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
    }
}

#[test]
fn id_lists() {
    assert_eq!(CheckId::parse_list("all").unwrap(), CheckId::ALL.to_vec());
    assert_eq!(CheckId::parse_list("D, a,D").unwrap(), vec![CheckId::A, CheckId::D]);
    assert_eq!(CheckId::parse_list("t1_1").unwrap(), vec![CheckId::T1_1]);
    assert!(matches!(CheckId::parse_list("A,Q"), Err(HarnessError::UnknownCheck(s)) if s == "Q"));
    assert!(!CheckId::standard().contains(&CheckId::ORACLES));
}

fn entries() -> Vec<CatalogEntry> {
    [GroupSpec::symmetric(4), GroupSpec::dihedral(6), GroupSpec::cyclic(10), GroupSpec::alternating(4)]
        .into_iter()
        .map(|s| CatalogEntry { name: s.display_name(), spec: s })
        .collect()
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let run = |jobs| {
        let config = RunConfig { jobs, checks: CheckId::ALL.to_vec(), ..RunConfig::default() };
        serde_json::to_string(&run_catalog(&entries(), &config)).unwrap()
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(0));
}

#[test]
fn extras_follow_entry_order() {
    let config = RunConfig { jobs: 2, checks: vec![CheckId::A], ..RunConfig::default() };
    let (report, extras) = run_catalog_with(&entries(), &config, |e, built, _| (e.name.clone(), built.analysis.group().order()));
    assert!(report.pass);
    let orders: Vec<usize> = extras.into_iter().map(|x| x.unwrap().1).collect();
    assert_eq!(orders, vec![24, 12, 10, 12]);
}
