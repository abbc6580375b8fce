//! JSON encoding of [`GroupSpec`].
//!
//! ```json
//! {"kind": "semidirect", "name": "C5:C4",
//!  "kernel": {"kind": "cyclic", "n": 5, "labels": ["x"]},
//!  "actor": {"kind": "cyclic", "n": 4, "labels": ["y"]},
//!  "action": [{"actor": "y", "images": {"x": "x^2"}}],
//!  "relations": ["y^-1 x y x^-2"]}
//! ```
//!
//! Other kinds: `cyclic`, `dihedral`, `symmetric`, `alternating` (all with
//! `n` and optional `labels`), `direct` (`factors`) and `permutation`
//! (`degree`, `generators: [{"label", "images"}]`, images 0-based).

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use sstgroups_core::group::{ActorImages, SpecNode};
use sstgroups_core::{ElementWord, GroupSpec};
use thiserror::Error;

pub const KINDS: [&str; 7] = ["cyclic", "dihedral", "symmetric", "alternating", "direct", "semidirect", "permutation"];

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
    #[error("unknown group kind `{kind}` at {path}")]
    UnknownKind { kind: String, path: String },
    #[error("bad action at {path}: {message}")]
    BadAction { path: String, message: String },
}

fn parse_err(context: &str, message: impl Into<String>) -> SpecError {
    SpecError::Parse { context: context.to_string(), message: message.into() }
}

/// A spec file: the group plus optional named subjects and expectations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecFile {
    pub spec: GroupSpec,
    /// Subgroups named by generator words, e.g. `"A4": ["u", "v"]`.
    pub subjects: BTreeMap<String, Vec<ElementWord>>,
    pub expected: BTreeMap<String, bool>,
}

pub fn parse_json_text(text: &str) -> Result<Value, SpecError> {
    serde_json::from_str(text).map_err(|e| parse_err(&format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    spec_from_value(&parse_json_text(text)?, "$")
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile, SpecError> {
    spec_file_from_value(&parse_json_text(text)?)
}

pub fn spec_file_from_value(v: &Value) -> Result<SpecFile, SpecError> {
    let mut v = v.clone();
    let (subjects, expected) = match v.as_object_mut() {
        Some(obj) => (obj.remove("subjects"), obj.remove("expected")),
        None => (None, None),
    };
    let spec = spec_from_value(&v, "$")?;
    let mut file = SpecFile { spec, subjects: BTreeMap::new(), expected: BTreeMap::new() };
    if let Some(subjects) = subjects {
        let obj = subjects.as_object().ok_or_else(|| parse_err("$.subjects", "expected an object"))?;
        for (name, words) in obj {
            let path = format!("$.subjects.{name}");
            file.subjects.insert(name.clone(), words_list(words, &path)?);
        }
    }
    if let Some(expected) = expected {
        file.expected = expected_map(&expected, "$.expected")?;
    }
    Ok(file)
}

pub(crate) fn expected_map(v: &Value, path: &str) -> Result<BTreeMap<String, bool>, SpecError> {
    let obj = v.as_object().ok_or_else(|| parse_err(path, "expected an object"))?;
    obj.iter()
        .map(|(k, b)| {
            b.as_bool()
                .map(|b| (k.clone(), b))
                .ok_or_else(|| parse_err(&format!("{path}.{k}"), "expected a boolean"))
        })
        .collect()
}

/// Words given either as a JSON list of strings or as one comma-separated string.
pub fn words_list(v: &Value, path: &str) -> Result<Vec<ElementWord>, SpecError> {
    let items: Vec<String> = match v {
        Value::String(s) => s.split(',').map(|w| w.trim().to_string()).filter(|w| !w.is_empty()).collect(),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .map(|(i, w)| w.as_str().map(str::to_string).ok_or_else(|| parse_err(&format!("{path}[{i}]"), "expected a string")))
            .collect::<Result<_, _>>()?,
        _ => return Err(parse_err(path, "expected a word list")),
    };
    items
        .iter()
        .map(|w| w.parse().map_err(|e: sstgroups_core::GroupError| parse_err(path, e.to_string())))
        .collect()
}

fn check_fields(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), SpecError> {
    for key in obj.keys() {
        if !["kind", "name", "relations"].contains(&key.as_str()) && !allowed.contains(&key.as_str()) {
            return Err(parse_err(&format!("{path}.{key}"), "unknown field"));
        }
    }
    Ok(())
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, SpecError> {
    obj.get(key).ok_or_else(|| parse_err(path, format!("missing field `{key}`")))
}

fn positive(obj: &Map<String, Value>, path: &str, key: &str) -> Result<usize, SpecError> {
    let v = field(obj, path, key)?;
    match v.as_u64() {
        Some(0) => Err(parse_err(&format!("{path}.{key}"), "must be positive")),
        Some(n) => usize::try_from(n).map_err(|_| parse_err(&format!("{path}.{key}"), "too large")),
        None => Err(parse_err(&format!("{path}.{key}"), "expected a positive integer")),
    }
}

fn strings(v: Option<&Value>, path: &str) -> Result<Vec<String>, SpecError> {
    match v {
        None => Ok(Vec::new()),
        Some(Value::Array(a)) => a
            .iter()
            .enumerate()
            .map(|(i, s)| s.as_str().map(str::to_string).ok_or_else(|| parse_err(&format!("{path}[{i}]"), "expected a string")))
            .collect(),
        Some(_) => Err(parse_err(path, "expected a list of strings")),
    }
}

pub fn spec_from_value(v: &Value, path: &str) -> Result<GroupSpec, SpecError> {
    let obj = v.as_object().ok_or_else(|| parse_err(path, "expected an object"))?;
    let kind = field(obj, path, "kind")?
        .as_str()
        .ok_or_else(|| parse_err(&format!("{path}.kind"), "expected a string"))?;
    if !KINDS.contains(&kind) {
        return Err(SpecError::UnknownKind { kind: kind.to_string(), path: path.to_string() });
    }
    let labels = || strings(obj.get("labels"), &format!("{path}.labels"));
    let node = match kind {
        "cyclic" | "dihedral" | "symmetric" | "alternating" => {
            check_fields(obj, path, &["n", "labels"])?;
            let n = positive(obj, path, "n")?;
            let labels = labels()?;
            match kind {
                "cyclic" => SpecNode::Cyclic { n, labels },
                "dihedral" => SpecNode::Dihedral { n, labels },
                "symmetric" => SpecNode::Symmetric { n, labels },
                _ => SpecNode::Alternating { n, labels },
            }
        }
        "direct" => {
            check_fields(obj, path, &["factors"])?;
            let factors = field(obj, path, "factors")?
                .as_array()
                .ok_or_else(|| parse_err(&format!("{path}.factors"), "expected a list"))?;
            if factors.is_empty() {
                return Err(parse_err(&format!("{path}.factors"), "needs at least one factor"));
            }
            SpecNode::Direct(
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| spec_from_value(f, &format!("{path}.factors[{i}]")))
                    .collect::<Result<_, _>>()?,
            )
        }
        "semidirect" => {
            check_fields(obj, path, &["kernel", "actor", "action"])?;
            let kernel = spec_from_value(field(obj, path, "kernel")?, &format!("{path}.kernel"))?;
            let actor = spec_from_value(field(obj, path, "actor")?, &format!("{path}.actor"))?;
            let action = parse_action(field(obj, path, "action")?, &format!("{path}.action"), &kernel, &actor)?;
            SpecNode::Semidirect { kernel: Box::new(kernel), actor: Box::new(actor), action }
        }
        "permutation" => {
            check_fields(obj, path, &["degree", "generators"])?;
            let degree = positive(obj, path, "degree")?;
            let gens = field(obj, path, "generators")?
                .as_array()
                .ok_or_else(|| parse_err(&format!("{path}.generators"), "expected a list"))?;
            let mut generators = Vec::new();
            for (i, g) in gens.iter().enumerate() {
                let gp = format!("{path}.generators[{i}]");
                let go = g.as_object().ok_or_else(|| parse_err(&gp, "expected an object"))?;
                let label = field(go, &gp, "label")?
                    .as_str()
                    .ok_or_else(|| parse_err(&format!("{gp}.label"), "expected a string"))?;
                let images: Vec<usize> = field(go, &gp, "images")?
                    .as_array()
                    .and_then(|a| a.iter().map(|x| x.as_u64().map(|x| x as usize)).collect())
                    .ok_or_else(|| parse_err(&format!("{gp}.images"), "expected a list of point indices"))?;
                let mut seen = vec![false; degree];
                if images.len() != degree || images.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                    return Err(parse_err(&format!("{gp}.images"), format!("not a permutation of 0..{degree}")));
                }
                generators.push((label.to_string(), images));
            }
            SpecNode::Permutation { degree, generators }
        }
        _ => unreachable!("kind checked above"),
    };
    let relations = strings(obj.get("relations"), &format!("{path}.relations"))?
        .iter()
        .enumerate()
        .map(|(i, w)| w.parse().map_err(|e: sstgroups_core::GroupError| parse_err(&format!("{path}.relations[{i}]"), e.to_string())))
        .collect::<Result<Vec<ElementWord>, _>>()?;
    let name = match obj.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(parse_err(&format!("{path}.name"), "expected a string")),
    };
    Ok(GroupSpec { name, node, relations })
}

fn parse_action(v: &Value, path: &str, kernel: &GroupSpec, actor: &GroupSpec) -> Result<Vec<ActorImages>, SpecError> {
    let bad = |p: &str, m: String| SpecError::BadAction { path: p.to_string(), message: m };
    let kernel_labels = kernel.generator_labels().map_err(|e| bad(path, e.to_string()))?;
    let actor_labels = actor.generator_labels().map_err(|e| bad(path, e.to_string()))?;
    let items = v.as_array().ok_or_else(|| bad(path, "expected a list".into()))?;
    let mut out = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let ip = format!("{path}[{i}]");
        let obj = item.as_object().ok_or_else(|| bad(&ip, "expected an object".into()))?;
        let actor_generator = obj
            .get("actor")
            .and_then(Value::as_str)
            .ok_or_else(|| bad(&ip, "missing actor generator".into()))?;
        if !actor_labels.iter().any(|l| l == actor_generator) {
            return Err(bad(&ip, format!("`{actor_generator}` is not an actor generator")));
        }
        let images_obj = obj
            .get("images")
            .and_then(Value::as_object)
            .ok_or_else(|| bad(&ip, "missing images".into()))?;
        let mut images = Vec::new();
        for (k, w) in images_obj {
            let wp = format!("{ip}.images.{k}");
            if !kernel_labels.contains(k) {
                return Err(bad(&wp, format!("`{k}` is not a kernel generator")));
            }
            let word: ElementWord = w
                .as_str()
                .ok_or_else(|| bad(&wp, "expected a word".into()))?
                .parse()
                .map_err(|e: sstgroups_core::GroupError| bad(&wp, e.to_string()))?;
            if let Some(l) = word.labels().find(|l| !kernel_labels.iter().any(|k| k == l)) {
                return Err(bad(&wp, format!("`{l}` is not a kernel generator")));
            }
            images.push((k.clone(), word));
        }
        out.push(ActorImages { actor_generator: actor_generator.to_string(), images });
    }
    Ok(out)
}

pub fn spec_to_value(spec: &GroupSpec) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(spec.kind()));
    if let Some(name) = &spec.name {
        obj.insert("name".into(), json!(name));
    }
    let put_labels = |obj: &mut Map<String, Value>, n: usize, labels: &[String]| {
        obj.insert("n".into(), json!(n));
        if !labels.is_empty() {
            obj.insert("labels".into(), json!(labels));
        }
    };
    match &spec.node {
        SpecNode::Cyclic { n, labels }
        | SpecNode::Dihedral { n, labels }
        | SpecNode::Symmetric { n, labels }
        | SpecNode::Alternating { n, labels } => put_labels(&mut obj, *n, labels),
        SpecNode::Direct(factors) => {
            obj.insert("factors".into(), Value::Array(factors.iter().map(spec_to_value).collect()));
        }
        SpecNode::Semidirect { kernel, actor, action } => {
            obj.insert("kernel".into(), spec_to_value(kernel));
            obj.insert("actor".into(), spec_to_value(actor));
            let action: Vec<Value> = action
                .iter()
                .map(|a| {
                    let images: Map<String, Value> =
                        a.images.iter().map(|(k, w)| (k.clone(), json!(w.to_string()))).collect();
                    json!({"actor": a.actor_generator, "images": images})
                })
                .collect();
            obj.insert("action".into(), Value::Array(action));
        }
        SpecNode::Permutation { degree, generators } => {
            obj.insert("degree".into(), json!(degree));
            let gens: Vec<Value> = generators
                .iter()
                .map(|(label, images)| json!({"label": label, "images": images}))
                .collect();
            obj.insert("generators".into(), Value::Array(gens));
        }
    }
    if !spec.relations.is_empty() {
        let words: Vec<String> = spec.relations.iter().map(|w| w.to_string()).collect();
        obj.insert("relations".into(), json!(words));
    }
    Value::Object(obj)
}

pub fn serialize_group_spec(spec: &GroupSpec) -> String {
    serde_json::to_string_pretty(&spec_to_value(spec)).expect("JSON values serialize")
}
