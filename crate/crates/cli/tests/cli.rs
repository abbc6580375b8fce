use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sstgroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sstgroups"))
        .args(args)
        .env_remove("SSTGROUPS_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn catalog_file(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog").join(name).display().to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn classify_ex1_5_reports_bt_but_not_sst() {
    let out = sstgroups(&["classify", &catalog_file("Ex1_5.json"), "--json", "-"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["group"]["order"], 20);
    assert_eq!(v["group"]["class_verdicts"]["BT"], true);
    assert_eq!(v["group"]["class_verdicts"]["SST"], false);
    let text = stdout(&out);
    let at = |k: &str| text.find(&format!("\n  \"{k}\"")).unwrap_or_else(|| panic!("no top-level {k}"));
    assert!(at("tool_version") < at("group") && at("group") < at("checks") && at("checks") < at("counterexamples"));
}

#[test]
fn predicate_nss_on_a4_is_false_and_expected() {
    let out = sstgroups(&["predicate", "Ex1_3.json", "--subgroup", "A4", "--pred", "nss"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("nss_permutable(A4) in Ex1_3: false"));
    let out = sstgroups(&["predicate", "Ex1_3.json", "--subgroup", "u, v", "--pred", "nss", "--expect", "true"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_ex1_8_theorem_d() {
    let out = sstgroups(&["verify", &catalog_file("Ex1_8.json"), "--check", "D", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let d = &v["checks"][0];
    assert_eq!(d["theorem_id"], "D");
    assert_eq!(d["pass"], true);
    let values: Vec<&Value> = d["statements"].as_array().unwrap().iter().map(|s| &s["value"]).collect();
    assert_eq!(values.len(), 8);
    assert!(values.iter().all(|v| **v == Value::Bool(false)));
}

#[test]
fn analyze_includes_structure() {
    let out = sstgroups(&["analyze", "S4.json", "--check", "A,B", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["structure"]["subgroups"], 30);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn expectation_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "c5c4.json", &std::fs::read_to_string(catalog_file("Ex1_5.json")).unwrap());
    let manifest = write(
        dir.path(),
        "m.json",
        r#"{"config":{"checks":["D"]},"entries":[
            {"name":"ok","spec":"c5c4.json"},
            {"name":"wrong","spec":{"kind":"symmetric","n":3},"expected":{"D":false}}]}"#,
    );
    let out = sstgroups(&["catalog", &manifest, "--json", "-"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mismatches"], 1);
    assert_eq!(v["entries"][0]["pass"], true);
    assert_eq!(v["entries"][1]["pass"], false);
}

#[test]
fn wrong_class_expectation_in_spec_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s3.json", r#"{"kind":"symmetric","n":3,"expected":{"SST":false}}"#);
    assert_eq!(code(&sstgroups(&["classify", &spec])), 1);
}

#[test]
fn usage_and_build_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write(dir.path(), "u.json", r#"{"kind":"sporadic","n":3}"#);
    let zero = write(dir.path(), "z.json", r#"{"kind":"cyclic","n":0}"#);
    assert_eq!(code(&sstgroups(&["classify", &unknown])), 2);
    assert_eq!(code(&sstgroups(&["classify", &zero])), 2);
    assert_eq!(code(&sstgroups(&["classify", "/nonexistent/spec.json"])), 2);
    assert_eq!(code(&sstgroups(&["frobnicate"])), 2);
    assert_eq!(code(&sstgroups(&["verify", "S3.json", "--check", "Z9"])), 2);
    assert_eq!(code(&sstgroups(&["predicate", "S3.json", "--subgroup", "q", "--pred", "normal"])), 2);
    assert_eq!(code(&sstgroups(&["classify", "S4.json", "--cap", "12"])), 2);
    let broken = write(
        dir.path(),
        "m.json",
        r#"{"entries":[{"name":"big","spec":{"kind":"cyclic","n":400}},{"name":"C2","spec":{"kind":"cyclic","n":2}}]}"#,
    );
    assert_eq!(code(&sstgroups(&["catalog", &broken, "--jobs", "2"])), 2);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&sstgroups(&["--help"])), 0);
    assert_eq!(code(&sstgroups(&["--version"])), 0);
}

#[test]
fn cap_flag_beats_environment() {
    let run = |env: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_sstgroups"))
            .args(args)
            .env("SSTGROUPS_ORDER_CAP", env)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("12", &["classify", "S4.json"])), 2);
    assert_eq!(code(&run("12", &["classify", "S4.json", "--cap", "24"])), 0);
    assert_eq!(code(&run("lots", &["classify", "S4.json"])), 2);
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = write(
        dir.path(),
        "m.json",
        r#"{"entries":[
            {"name":"S4","spec":{"kind":"symmetric","n":4}},
            {"name":"D12","spec":{"kind":"dihedral","n":6}},
            {"name":"C12","spec":{"kind":"cyclic","n":12}}]}"#,
    );
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(code(&sstgroups(&["catalog", &manifest, "--jobs", "1", "--json", a.to_str().unwrap()])), 0);
    assert_eq!(code(&sstgroups(&["catalog", &manifest, "--jobs", "3", "--json", b.to_str().unwrap()])), 0);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn seed_sample_is_accepted() {
    let out = sstgroups(&["classify", "S5.json", "--seed-sample", "7"]);
    assert_eq!(code(&out), 0);
}
