//! Benchmark suites.
//!
//! One instance per line, `FAMILY N SEED TASK KEY=VALUE…`, `#` starts a
//! comment:
//!
//! ```text
//! random 8 1 balsep t=5 r=1 s=2
//! biclique 9 0 decompose k=3
//! ```
//!
//! `balsep` takes the first `t` vertices (default all) as terminals. Each
//! instance yields an `fpt` row and a `brute` row; the brute row is marked
//! `skipped` when `n` or the budget exceeds the cap.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::Result;
use dirtw_core::balsep::brute_force_balanced_separator;
use dirtw_core::generate::{generate, Family};
use dirtw_core::{
    balanced_separator, decompose, validate, BalancedSeparatorInstance, BalancedSeparatorResult, Decomposition, Digraph,
    VertexSet,
};

use crate::{fail, Status};

pub const COLUMNS: [&str; 12] = ["id", "instance", "task", "algorithm", "n", "k", "r", "s", "wall_ms", "verdict", "size", "agree"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteCap {
    pub n: usize,
    pub s: usize,
}

impl Default for BruteCap {
    fn default() -> Self {
        BruteCap { n: 12, s: 4 }
    }
}

impl BruteCap {
    /// `N` or `N,S`; `None` gives the default.
    pub fn parse(text: Option<&str>) -> Result<Self> {
        let Some(text) = text else {
            return Ok(BruteCap::default());
        };
        let bad = || fail(Status::BadParameter, format!("brute cap must be N or N,S, got `{text}`"));
        let mut parts = text.split(',').map(|p| p.trim().parse::<usize>());
        let n = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
        let s = match parts.next() {
            Some(s) => s.map_err(|_| bad())?,
            None => BruteCap::default().s,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(BruteCap { n, s })
    }

    fn admits(&self, n: usize, s: usize) -> bool {
        n <= self.n && s <= self.s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Task {
    Balsep { t: Option<usize>, r: usize, s: usize },
    Decompose { k: usize },
}

#[derive(Clone, Debug)]
struct Entry {
    family: Family,
    n: usize,
    seed: u64,
    task: Task,
}

fn parse_line(line: &str, lineno: usize) -> Result<Entry> {
    let bad = |msg: String| fail(Status::Parse, format!("suite line {lineno}: {msg}"));
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [family, n, seed, task, params @ ..] = tokens.as_slice() else {
        return Err(bad("expected `FAMILY N SEED TASK KEY=VALUE…`".into()));
    };
    let family: Family = family.parse().map_err(bad)?;
    let n: usize = n.parse().map_err(|_| bad(format!("bad size `{n}`")))?;
    let seed: u64 = seed.parse().map_err(|_| bad(format!("bad seed `{seed}`")))?;
    let mut kv = BTreeMap::new();
    for p in params {
        let (key, value) = p.split_once('=').ok_or_else(|| bad(format!("expected KEY=VALUE, got `{p}`")))?;
        let value: usize = value.parse().map_err(|_| bad(format!("bad value in `{p}`")))?;
        kv.insert(key, value);
    }
    let mut need = |key: &str| kv.remove(key).ok_or_else(|| bad(format!("missing `{key}=`")));
    let task = match *task {
        "balsep" => Task::Balsep {
            r: need("r")?,
            s: need("s")?,
            t: kv.remove("t"),
        },
        "decompose" => Task::Decompose { k: need("k")? },
        other => return Err(bad(format!("unknown task `{other}` (balsep, decompose)"))),
    };
    if let Some(key) = kv.keys().next() {
        return Err(bad(format!("unexpected parameter `{key}`")));
    }
    Ok(Entry { family, n, seed, task })
}

fn parse_suite(text: &str) -> Result<Vec<Entry>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_line(l, i))
        .collect()
}

struct Row {
    algorithm: &'static str,
    millis: f64,
    verdict: String,
    size: Option<usize>,
    agree: &'static str,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn separator_verdict(r: &BalancedSeparatorResult) -> (String, Option<usize>) {
    match r {
        BalancedSeparatorResult::Linked => ("linked".into(), None),
        BalancedSeparatorResult::Separator(z) => ("separator".into(), Some(z.len())),
    }
}

fn run_balsep(d: &Digraph, t: Option<usize>, r: usize, s: usize, cap: BruteCap) -> Result<[Row; 2]> {
    let terminals: VertexSet = (0..t.unwrap_or(d.vertex_count()).min(d.vertex_count())).collect();
    let (fpt, millis) = timed(|| balanced_separator(&BalancedSeparatorInstance::new(d, &terminals, r, s)));
    let fpt = fpt?;
    let (verdict, size) = separator_verdict(&fpt);
    if !cap.admits(d.vertex_count(), s) {
        return Ok([Row { algorithm: "fpt", millis, verdict, size, agree: "-" }, skipped()]);
    }
    let (brute, brute_ms) = timed(|| brute_force_balanced_separator(d, &terminals, r, s));
    let agree = if brute.is_linked() == fpt.is_linked() { "yes" } else { "no" };
    let (bv, bs) = separator_verdict(&brute);
    Ok([
        Row { algorithm: "fpt", millis, verdict, size, agree },
        Row { algorithm: "brute", millis: brute_ms, verdict: bv, size: bs, agree },
    ])
}

fn run_decompose(d: &Digraph, k: usize, cap: BruteCap) -> Result<[Row; 2]> {
    let (out, millis) = timed(|| decompose(d, k));
    let out = out?;
    let (verdict, size) = match &out {
        Decomposition::Decomposition(dec) => ("decomposition".to_string(), Some(dec.width())),
        Decomposition::Certificate(c) => ("certificate".to_string(), Some(c.terminals.len())),
    };
    if !cap.admits(d.vertex_count(), k) {
        return Ok([Row { algorithm: "fpt", millis, verdict, size, agree: "-" }, skipped()]);
    }
    // the brute row re-checks the emitted artifact exhaustively
    let ((bv, bs), brute_ms) = timed(|| match &out {
        Decomposition::Decomposition(dec) => {
            let report = validate(d, dec, true);
            let ok = report.is_valid() && report.width + 2 <= 3 * k;
            (if ok { "decomposition" } else { "invalid" }.to_string(), Some(report.width))
        }
        Decomposition::Certificate(c) => match brute_force_balanced_separator(d, &c.terminals, c.r, c.k) {
            BalancedSeparatorResult::Linked => ("certificate".to_string(), Some(c.terminals.len())),
            BalancedSeparatorResult::Separator(z) => ("separator".to_string(), Some(z.len())),
        },
    });
    let agree = if bv == verdict { "yes" } else { "no" };
    Ok([
        Row { algorithm: "fpt", millis, verdict, size, agree },
        Row { algorithm: "brute", millis: brute_ms, verdict: bv, size: bs, agree },
    ])
}

fn skipped() -> Row {
    Row {
        algorithm: "brute",
        millis: 0.0,
        verdict: "skipped".into(),
        size: None,
        agree: "-",
    }
}

pub fn run_suite(path: &Path, cap: BruteCap) -> Result<String> {
    let text = fs::read_to_string(path).map_err(|e| fail(Status::Parse, format!("{}: {e}", path.display())))?;
    let entries = parse_suite(&text)?;
    let mut records: Vec<(usize, &'static str, Vec<String>)> = Vec::new();
    for (id, e) in entries.iter().enumerate() {
        let d = generate(e.family, e.n, e.seed);
        let instance = format!("{}-{}-{}", e.family, e.n, e.seed);
        let dash = || "-".to_string();
        let (task, k, r, s, rows) = match e.task {
            Task::Balsep { t, r, s } => ("balsep", dash(), r.to_string(), s.to_string(), run_balsep(&d, t, r, s, cap)?),
            Task::Decompose { k } => ("decompose", k.to_string(), dash(), dash(), run_decompose(&d, k, cap)?),
        };
        for row in rows {
            let fields = vec![
                (id + 1).to_string(),
                instance.clone(),
                task.to_string(),
                row.algorithm.to_string(),
                e.n.to_string(),
                k.clone(),
                r.clone(),
                s.clone(),
                format!("{:.3}", row.millis),
                row.verdict,
                row.size.map_or_else(dash, |x| x.to_string()),
                row.agree.to_string(),
            ];
            records.push((id, row.algorithm, fields));
        }
    }
    // fpt before brute within an instance
    records.sort_by_key(|&(id, alg, _)| (id, alg != "fpt"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS)?;
    for (_, _, fields) in records {
        w.write_record(&fields)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suite_lines() {
        let s = parse_suite("# demo\n\nrandom 8 1 balsep t=5 r=1 s=2\nbiclique 6 0 decompose k=2\n").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].task, Task::Balsep { t: Some(5), r: 1, s: 2 });
        assert_eq!(s[1].task, Task::Decompose { k: 2 });
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_suite("random 8 1 balsep r=1").is_err());
        assert!(parse_suite("random 8 1 balsep r=1 s=1 q=2").is_err());
        assert!(parse_suite("grid 8 1 decompose k=1").is_err());
        assert!(parse_suite("random 8").is_err());
    }

    #[test]
    fn cap_syntax() {
        assert_eq!(BruteCap::parse(None).unwrap(), BruteCap { n: 12, s: 4 });
        assert_eq!(BruteCap::parse(Some("20")).unwrap(), BruteCap { n: 20, s: 4 });
        assert_eq!(BruteCap::parse(Some("20,6")).unwrap(), BruteCap { n: 20, s: 6 });
        assert!(BruteCap::parse(Some("x")).is_err());
        assert!(BruteCap::parse(Some("1,2,3")).is_err());
    }
}
