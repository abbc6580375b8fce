//! Command-line entry point.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::Value;
use sstgroups_core::group::{AssociativityCheck, SpecNode, DEFAULT_ORDER_CAP};
use sstgroups_core::{BuildConfig, GroupAnalysis, GroupSpec, PredicateId};
use sstgroups_harness::{build_entry, run_catalog_with, BuiltEntry, CatalogEntry, CheckId, RunConfig, TheoremReport};

use crate::expect::{evaluate_all, parse_words, EvalContext, ExpectationResult, Subject};
use crate::manifest::{embedded_file, file_loader, is_manifest, manifest_from_value, standard_catalog, Manifest};
use crate::report::{class_rows, to_json, CatalogJson, GroupReport, PredicateReport, Structure};
use crate::spec_json::{parse_json_text, spec_file_from_value, SpecFile};

/// Environment variable overriding the default order cap.
pub const CAP_ENV: &str = "SSTGROUPS_ORDER_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sstgroups", version, about = "Subgroup permutability on small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest group order to build (overrides SSTGROUPS_ORDER_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled associativity checks on large tables.
    #[arg(long = "seed-sample", global = true)]
    seed_sample: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure, class verdicts and checks for one group.
    Analyze {
        spec: String,
        /// Comma-separated check ids (default: every standard check).
        #[arg(long)]
        check: Option<String>,
    },
    /// Decide one predicate for the subgroup generated by the given words.
    Predicate {
        spec: String,
        /// Generator words, comma-separated, or a subject named in the spec file.
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        pred: String,
        /// Expected verdict; a mismatch exits with 1.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Class verdicts, by brute force and by characterization.
    Classify { spec: String },
    /// Run checks on a spec, a manifest, or `standard`.
    Verify {
        target: String,
        #[arg(long)]
        check: String,
    },
    /// Run a manifest, or `standard` for the built-in catalog.
    Catalog { manifest: String },
}

struct Options {
    build: BuildConfig,
    cap_given: bool,
    jobs: Option<usize>,
    json: Option<PathBuf>,
}

enum Input {
    Spec(SpecFile),
    Manifest(Manifest),
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn options(cli: &Cli) -> Result<Options> {
    let env_cap = match std::env::var(CAP_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().with_context(|| format!("{CAP_ENV}={v} is not a number"))?),
        Err(_) => None,
    };
    let cap = cli.cap.or(env_cap);
    let mut build = BuildConfig { order_cap: cap.unwrap_or(DEFAULT_ORDER_CAP), ..BuildConfig::default() };
    if let Some(seed) = cli.seed_sample {
        build.associativity = AssociativityCheck { seed };
    }
    Ok(Options { build, cap_given: cap.is_some(), jobs: cli.jobs, json: cli.json.clone() })
}

fn dispatch(cli: Cli) -> Result<i32> {
    let opts = options(&cli)?;
    match &cli.command {
        Command::Analyze { spec, check } => {
            let file = load_spec(spec)?;
            let checks = match check {
                Some(list) => CheckId::parse_list(list)?,
                None => CheckId::standard(),
            };
            analyze(&opts, &file, &checks, true)
        }
        Command::Verify { target, check } => {
            let checks = CheckId::parse_list(check)?;
            if checks.is_empty() {
                bail!("--check needs at least one id");
            }
            match load_input(target)? {
                Input::Spec(file) => analyze(&opts, &file, &checks, false),
                Input::Manifest(mut m) => {
                    m.config.checks = Some(checks);
                    catalog(&opts, &m)
                }
            }
        }
        Command::Catalog { manifest } => match load_input(manifest)? {
            Input::Manifest(m) => catalog(&opts, &m),
            Input::Spec(_) => bail!("{manifest} is a group spec, not a manifest"),
        },
        Command::Classify { spec } => classify(&opts, &load_spec(spec)?),
        Command::Predicate { spec, subgroup, pred, expect } => {
            let pred: PredicateId = pred.parse().map_err(|e| anyhow!("{e}"))?;
            predicate(&opts, &load_spec(spec)?, subgroup, pred, *expect)
        }
    }
}

/// Reads `source` from disk, falling back to the built-in catalog files;
/// `standard` is the built-in manifest.
fn load_input(source: &str) -> Result<Input> {
    if source == "standard" {
        return Ok(Input::Manifest(standard_catalog()));
    }
    let path = Path::new(source);
    let (text, dir) = match std::fs::read_to_string(path) {
        Ok(text) => (text, path.parent().map(Path::to_path_buf)),
        Err(e) => {
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or(source);
            match embedded_file(name) {
                Some(text) if !path.exists() => (text.to_string(), None),
                _ => return Err(anyhow!("cannot read {source}: {e}")),
            }
        }
    };
    let value = parse_json_text(&text).with_context(|| source.to_string())?;
    if is_manifest(&value) {
        let m = match dir {
            Some(dir) => manifest_from_value(&value, &file_loader(&dir))?,
            None => manifest_from_value(&value, &|p: &str| {
                embedded_file(p).map(str::to_string).ok_or_else(|| crate::manifest::ManifestError::Io {
                    path: p.to_string(),
                    message: "not in the standard catalog".into(),
                })
            })?,
        };
        return Ok(Input::Manifest(m));
    }
    Ok(Input::Spec(spec_from(&value, source)?))
}

fn spec_from(value: &Value, source: &str) -> Result<SpecFile> {
    spec_file_from_value(value).with_context(|| source.to_string())
}

fn load_spec(source: &str) -> Result<SpecFile> {
    match load_input(source)? {
        Input::Spec(file) => Ok(file),
        Input::Manifest(_) => bail!("{source} is a manifest; this command takes one group spec"),
    }
}

fn factor_names(spec: &GroupSpec) -> Vec<String> {
    match &spec.node {
        SpecNode::Direct(items) if items.len() >= 2 => items.iter().map(GroupSpec::display_name).collect(),
        _ => Vec::new(),
    }
}

fn named_factors(spec: &GroupSpec, built: &BuiltEntry) -> Vec<(String, Arc<GroupAnalysis>)> {
    factor_names(spec).into_iter().zip(built.factors.iter().cloned()).collect()
}

fn expectations(file: &SpecFile, built: &BuiltEntry, checks: &[TheoremReport], selected: &[CheckId]) -> Vec<ExpectationResult> {
    let factors = named_factors(&file.spec, built);
    let ctx = EvalContext { analysis: &built.analysis, factors: &factors, subjects: &file.subjects, checks };
    evaluate_all(&ctx, &file.expected, selected)
}

fn emit(opts: &Options, json: &str, human: &str) -> Result<()> {
    match &opts.json {
        Some(p) if p.as_os_str() == "-" => print!("{json}"),
        Some(p) => {
            std::fs::write(p, json).with_context(|| format!("cannot write {}", p.display()))?;
            print!("{human}");
        }
        None => print!("{human}"),
    }
    std::io::stdout().flush().ok();
    Ok(())
}

fn verdict_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn human_group(report: &GroupReport) -> String {
    let g = &report.group;
    let mut out = format!("{}: order {}, primes {:?}\n", g.name, g.order, g.pi);
    let classes: Vec<String> = g
        .class_verdicts
        .0
        .iter()
        .map(|(c, v)| format!("{c}={}", verdict_word(v.as_bool())))
        .collect();
    out += &format!("  classes: {}\n", classes.join(" "));
    for c in &report.checks {
        let outcome = serde_json::to_value(c.outcome).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        out += &format!("  {:<8} {}\n", c.theorem_id, outcome);
        for x in &c.counterexamples {
            let orders: Vec<usize> = x.subgroups.iter().map(|s| s.order).collect();
            out += &format!("    counterexample: {} (orders {:?})\n", x.description, orders);
        }
    }
    out += &human_expectations(&report.expectations);
    out
}

fn human_expectations(results: &[ExpectationResult]) -> String {
    let mut out = String::new();
    for e in results {
        let status = if e.matches { "ok" } else { "MISMATCH" };
        out += &format!("  expect {} = {}: got {} [{status}]", e.key, e.expected, verdict_word(e.actual));
        if let Some(err) = &e.error {
            out += &format!(" ({err})");
        }
        out.push('\n');
    }
    out
}

fn run_config(opts: &Options, checks: &[CheckId], manifest: Option<&Manifest>) -> RunConfig {
    let mut build = opts.build;
    if !opts.cap_given {
        if let Some(cap) = manifest.and_then(|m| m.config.cap) {
            build.order_cap = cap;
        }
    }
    let jobs = opts.jobs.or(manifest.and_then(|m| m.config.jobs)).unwrap_or(0);
    RunConfig { build, jobs, checks: checks.to_vec() }
}

fn build_error(name: &str, e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {name}: {e}");
    EXIT_USAGE
}

fn analyze(opts: &Options, file: &SpecFile, checks: &[CheckId], with_structure: bool) -> Result<i32> {
    let name = file.spec.display_name();
    let config = run_config(opts, checks, None);
    let entry = CatalogEntry { name: name.clone(), spec: file.spec.clone() };
    let (report, mut extra) = run_catalog_with(std::slice::from_ref(&entry), &config, |_, built, reports| {
        let exp = expectations(file, built, reports, checks);
        let structure = with_structure.then(|| (Structure::of(&built.analysis), class_rows(&built.analysis)));
        (built.analysis.clone(), exp, structure)
    });
    let entry_report = report.entries.into_iter().next().expect("one entry");
    if let Some(err) = entry_report.error {
        return Ok(build_error(&name, err));
    }
    let (analysis, exp, structure) = extra.pop().flatten().expect("built entry has extras");
    let mut out = GroupReport::new(&name, &analysis, entry_report.checks);
    out.expectations = exp;
    if let Some((structure, classes)) = structure {
        out.structure = Some(structure);
        out.classes = Some(classes);
    }
    emit(opts, &to_json(&out), &human_group(&out))?;
    Ok(if out.pass() { EXIT_OK } else { EXIT_FAIL })
}

fn build_single(opts: &Options, file: &SpecFile) -> std::result::Result<BuiltEntry, i32> {
    let name = file.spec.display_name();
    build_entry(&file.spec, &opts.build).map_err(|e| build_error(&name, e))
}

fn classify(opts: &Options, file: &SpecFile) -> Result<i32> {
    let built = match build_single(opts, file) {
        Ok(b) => b,
        Err(code) => return Ok(code),
    };
    let name = file.spec.display_name();
    let mut out = GroupReport::new(&name, &built.analysis, Vec::new());
    out.expectations = expectations(file, &built, &[], &[]);
    out.classes = Some(class_rows(&built.analysis));
    let mut human = format!("{name}: order {}\n", out.group.order);
    for row in out.classes.as_deref().unwrap_or_default() {
        human += &format!(
            "  {:<14} bruteforce={:<5} characterization={}\n",
            row.class,
            verdict_word(row.bruteforce),
            verdict_word(row.characterization)
        );
    }
    human += &human_expectations(&out.expectations);
    emit(opts, &to_json(&out), &human)?;
    Ok(if out.pass() { EXIT_OK } else { EXIT_FAIL })
}

fn predicate(opts: &Options, file: &SpecFile, subgroup: &str, pred: PredicateId, expect: Option<bool>) -> Result<i32> {
    let subject = if file.subjects.contains_key(subgroup.trim()) {
        Subject::Named(subgroup.trim().to_string())
    } else {
        Subject::Words(parse_words(subgroup).map_err(|e| anyhow!("--subgroup: {e}"))?)
    };
    let built = match build_single(opts, file) {
        Ok(b) => b,
        Err(code) => return Ok(code),
    };
    let factors = named_factors(&file.spec, &built);
    let ctx = EvalContext { analysis: &built.analysis, factors: &factors, subjects: &file.subjects, checks: &[] };
    let h = ctx.resolve(&subject).map_err(|e| anyhow!("--subgroup: {e}"))?;
    let verdict = built.analysis.in_group(pred, h);
    let name = file.spec.display_name();
    let mut out = GroupReport::new(&name, &built.analysis, Vec::new());
    out.expectations = evaluate_all(&ctx, &file.expected, &[]);
    if let Some(want) = expect {
        out.expectations.push(ExpectationResult {
            key: format!("{pred}({subgroup})"),
            expected: want,
            actual: Some(verdict.verdict),
            matches: verdict.verdict == want,
            error: None,
        });
    }
    let p = PredicateReport::of(&built.analysis, &verdict);
    let mut human = format!("{pred}({subgroup}) in {name}: {}\n", p.verdict);
    if let Some(w) = &p.witness {
        human += &format!("  witness supplement of order {}\n", w.order);
    }
    if let Some(r) = &p.refutation {
        human += &format!("  refutation: {r}\n");
    }
    human += &human_expectations(&out.expectations);
    out.predicate = Some(p);
    emit(opts, &to_json(&out), &human)?;
    Ok(if out.pass() { EXIT_OK } else { EXIT_FAIL })
}

/// Runs a manifest and assembles the catalog report.
pub fn run_manifest(m: &Manifest, config: &RunConfig) -> CatalogJson {
    let entries = m.catalog_entries();
    let (report, extras) = run_catalog_with(&entries, config, |entry, built, reports| {
        let file = &m.entry(&entry.name).expect("entry from this manifest").file;
        expectations(file, built, reports, &config.checks)
    });
    CatalogJson::new(report, extras.into_iter().map(Option::unwrap_or_default).collect())
}

fn catalog(opts: &Options, m: &Manifest) -> Result<i32> {
    let checks = m.selected_checks();
    let config = run_config(opts, &checks, Some(m));
    let out = run_manifest(m, &config);
    let mut human = String::new();
    for e in &out.entries {
        let status = match (&e.error, e.pass) {
            (Some(_), _) => "error",
            (None, true) => "pass",
            (None, false) => "FAIL",
        };
        human += &format!("{:<12} {status}\n", e.name);
        if let Some(err) = &e.error {
            human += &format!("  {err}\n");
        }
        for c in e.checks.iter().filter(|c| !c.pass) {
            human += &format!("  {} fails\n", c.theorem_id);
            for x in &c.counterexamples {
                human += &format!("    counterexample: {}\n", x.description);
            }
        }
        human += &human_expectations(&e.expectations.iter().filter(|x| !x.matches).cloned().collect::<Vec<_>>());
    }
    let t = out.tallies;
    human += &format!(
        "{} entries: {} pass, {} fail, {} not applicable, {} errors, {} expectation mismatches\n",
        out.entries.len(),
        t.pass,
        t.fail,
        t.not_applicable,
        t.errors,
        out.mismatches
    );
    emit(opts, &to_json(&out), &human)?;
    Ok(if out.has_errors() {
        EXIT_USAGE
    } else if out.pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}
