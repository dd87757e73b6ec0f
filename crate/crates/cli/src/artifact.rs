//! Artifact validation. The kind is read off the JSON keys:
//!
//! | keys                | kind                          |
//! |---------------------|-------------------------------|
//! | `nodes arcs root`   | arboreal decomposition        |
//! | `T k r`             | linked-set certificate        |
//! | `T r Z`             | balanced separator            |
//! | `spines linkages …` | path system                   |
//! | `path A [system]`   | well-linked set on a path     |

use std::fmt::Write as _;
use std::fs;
use std::path::Path as FsPath;

use anyhow::Result;
use dirtw_core::bramble::{verify_well_linked, PathSystem};
use dirtw_core::{
    balanced_separator, is_balanced_separator, validate, ArborealDecomposition, BalancedSeparatorInstance,
    BalancedSeparatorResult, Digraph, LinkedSetCertificate, Path, VertexSet,
};
use serde_json::Value;

use crate::{fail, Status};

/// Largest set checked for well-linkedness; the check is exponential.
const WELL_LINKED_LIMIT: usize = 16;

pub struct Report {
    pub valid: bool,
    pub text: String,
}

impl Report {
    fn new(kind: &str, problems: Vec<String>, facts: &[String]) -> Self {
        let valid = problems.is_empty();
        let mut text = format!("{kind}: {}\n", if valid { "valid" } else { "INVALID" });
        for f in facts {
            let _ = writeln!(text, "  {f}");
        }
        for p in &problems {
            let _ = writeln!(text, "  violation: {p}");
        }
        Report { valid, text }
    }
}

fn parse_err(e: impl std::fmt::Display) -> anyhow::Error {
    fail(Status::Parse, e.to_string())
}

fn labels(d: &Digraph, v: &Value, key: &str) -> Result<Vec<usize>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(format!("missing array `{key}`")))?
        .iter()
        .map(|x| {
            let label = x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string());
            d.index_of(&label).ok_or_else(|| parse_err(format!("unknown vertex `{label}`")))
        })
        .collect()
}

fn uint(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("missing integer `{key}`")))
}

pub fn validate_file(d: &Digraph, path: &FsPath) -> Result<Report> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    validate_value(d, &v)
}

pub fn validate_value(d: &Digraph, v: &Value) -> Result<Report> {
    let has = |key: &str| v.get(key).is_some();
    if has("nodes") && has("arcs") {
        decomposition(d, v)
    } else if has("T") && has("Z") {
        separator(d, v)
    } else if has("T") && has("k") {
        certificate(d, v)
    } else if has("spines") {
        let sys = PathSystem::from_json(d, v).map_err(parse_err)?;
        Ok(path_system(d, &sys))
    } else if has("path") && has("A") {
        well_linked(d, v)
    } else {
        Err(parse_err("unrecognized artifact"))
    }
}

fn decomposition(d: &Digraph, v: &Value) -> Result<Report> {
    let dec = ArborealDecomposition::from_json(d, v).map_err(parse_err)?;
    let report = validate(d, &dec, false);
    let problems = report.violations.iter().map(|x| x.describe(d, &dec)).collect();
    let nice = report.is_valid() && validate(d, &dec, true).is_valid();
    let facts = [format!("width {}", report.width), format!("nice: {}", if nice { "yes" } else { "no" })];
    Ok(Report::new("decomposition", problems, &facts))
}

fn certificate(d: &Digraph, v: &Value) -> Result<Report> {
    let c = LinkedSetCertificate::from_json(d, v).map_err(parse_err)?;
    let inst = BalancedSeparatorInstance::new(d, &c.terminals, c.r, c.k);
    let problems = match balanced_separator(&inst)? {
        BalancedSeparatorResult::Linked => Vec::new(),
        BalancedSeparatorResult::Separator(z) => {
            vec![format!("(T, {})-balanced separator {:?} of size {}", c.r, d.labels_of(&z), z.len())]
        }
    };
    let facts = [format!("|T| = {}, k = {}, r = {}", c.terminals.len(), c.k, c.r)];
    Ok(Report::new("certificate", problems, &facts))
}

fn separator(d: &Digraph, v: &Value) -> Result<Report> {
    let t: VertexSet = labels(d, v, "T")?.into_iter().collect();
    let z: VertexSet = labels(d, v, "Z")?.into_iter().collect();
    let r = uint(v, "r")?;
    let mut problems = Vec::new();
    if !is_balanced_separator(d, &t, r, &z) {
        problems.push(format!("some strong component keeps more than {r} terminals"));
    }
    if let Some(s) = v.get("s").and_then(Value::as_u64) {
        if z.len() > s as usize {
            problems.push(format!("{} vertices exceed the budget {s}", z.len()));
        }
    }
    Ok(Report::new("separator", problems, &[format!("|Z| = {}", z.len())]))
}

fn path_system(d: &Digraph, sys: &PathSystem) -> Report {
    let l = sys.linkage_size();
    let facts = [format!("{} spines, linkage size {l}", sys.spines.len())];
    Report::new("path system", sys.check(d, l), &facts)
}

fn well_linked(d: &Digraph, v: &Value) -> Result<Report> {
    let path = match Path::new(d, labels(d, v, "path")?) {
        Ok(path) => path,
        Err(e) => return Ok(Report::new("well-linked set", vec![format!("path: {e}")], &[])),
    };
    let a: VertexSet = labels(d, v, "A")?.into_iter().collect();
    let mut problems = Vec::new();
    let mut facts = vec![format!("|A| = {}, path of {} vertices", a.len(), path.len())];
    for &x in &a {
        if !path.contains(x) {
            problems.push(format!("anchor {} is not on the path", d.label(x)));
        }
    }
    if a.len() <= WELL_LINKED_LIMIT {
        if !verify_well_linked(d, &a) {
            problems.push("A is not well-linked".into());
        }
    } else {
        facts.push(format!("well-linkedness not checked above {WELL_LINKED_LIMIT} anchors"));
    }
    let mut report = Report::new("well-linked set", problems, &facts);
    if let Some(sys) = v.get("system") {
        let sys = PathSystem::from_json(d, sys).map_err(parse_err)?;
        let inner = path_system(d, &sys);
        report.valid &= inner.valid;
        report.text += &inner.text;
    }
    Ok(report)
}
