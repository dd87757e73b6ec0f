mod artifact;
mod bench;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use dirtw_core::arboreal::ArborealError;
use dirtw_core::bramble::{build_path_system, g, verify_well_linked, well_linked_set};
use dirtw_core::generate::{generate, Family};
use dirtw_core::{
    balanced_separator, decompose, ArborealDecomposition, BalancedSeparatorInstance, BalancedSeparatorResult,
    Decomposition, Digraph, VertexSet,
};
use serde_json::{json, Value};

/// Largest anchor set re-verified before `welllinked` prints it.
const VERIFY_LIMIT: usize = 8;

#[derive(Parser)]
#[command(name = "dirtw", version, about = "Directed tree-width toolkit")]
struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arboreal decomposition of width at most 3k-2, or a linked-set certificate.
    Decompose {
        #[arg(short)]
        k: usize,
        file: PathBuf,
        /// Also write the arborescence in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// (T, r)-balanced separator of size at most s, or LINKED.
    Balsep {
        /// Terminal labels; all vertices when omitted.
        #[arg(short = 'T', value_delimiter = ',')]
        terminals: Option<Vec<String>>,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        s: usize,
        file: PathBuf,
        /// Print `{T, r, Z}` instead of the bare separator, for `validate`.
        #[arg(long)]
        artifact: bool,
    },
    /// Well-linked set of k vertices on a bramble-hitting path.
    Welllinked {
        /// Defaults to 2lp when a path system is requested.
        #[arg(short)]
        k: Option<usize>,
        file: PathBuf,
        /// Linkage size of an additional path system.
        #[arg(short, requires = "p")]
        l: Option<usize>,
        /// Number of spines of the path system.
        #[arg(short, requires = "l")]
        p: Option<usize>,
    },
    /// Check an artifact produced by another command against its graph.
    Validate { file: PathBuf, artifact: PathBuf },
    /// Emit a generated digraph as an edge list.
    Gen {
        family: String,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a benchmark suite and print CSV.
    Bench {
        suite: PathBuf,
        /// Largest `n` and `s` given to the brute-force oracles, as `N` or `N,S`.
        #[arg(long, env = "DIRTW_BRUTE_CAP")]
        brute_cap: Option<String>,
    },
}

/// Exit statuses of the command-line contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Invalid = 1,
    Parse = 2,
    BadParameter = 3,
    Certificate = 10,
    Thin = 11,
}

/// An error that carries its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

pub fn fail(status: Status, message: impl Into<String>) -> anyhow::Error {
    Failure {
        status,
        message: message.into(),
    }
    .into()
}

pub fn read_graph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).map_err(|e| fail(Status::Parse, format!("{}: {e}", path.display())))?;
    Digraph::parse_edge_list(&text).map_err(|e| fail(Status::Parse, format!("{}: {e}", path.display())))
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn to_dot(d: &Digraph, dec: &ArborealDecomposition) -> String {
    let quote = |set: &VertexSet| d.labels_of(set).join(",").replace('"', "\\\"");
    let mut s = String::from("digraph decomposition {\n  node [shape=box];\n");
    for (id, bag) in &dec.bags {
        s += &format!("  n{id} [label=\"{id}: {}\"];\n", quote(bag));
    }
    for a in &dec.arcs {
        s += &format!("  n{} -> n{} [label=\"{}\"];\n", a.from, a.to, quote(&a.guard));
    }
    s + "}\n"
}

fn cmd_decompose(out: &Option<PathBuf>, k: usize, file: &Path, dot: Option<&Path>) -> Result<Status> {
    let d = read_graph(file)?;
    let result = decompose(&d, k).map_err(|e| match e {
        ArborealError::ZeroParameter => fail(Status::BadParameter, e.to_string()),
        ArborealError::EmptyGraph => fail(Status::Parse, e.to_string()),
        other => other.into(),
    })?;
    match result {
        Decomposition::Decomposition(dec) => {
            eprintln!("decomposition: width {}, {} nodes", dec.width(), dec.node_count());
            if let Some(path) = dot {
                fs::write(path, to_dot(&d, &dec)).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(out, &pretty(&dec.to_json(&d)))?;
            Ok(Status::Success)
        }
        Decomposition::Certificate(c) => {
            eprintln!("certificate: |T| = {}, k = {}, r = {}", c.terminals.len(), c.k, c.r);
            if dot.is_some() {
                eprintln!("note: no DOT output for a certificate");
            }
            emit(out, &pretty(&c.to_json(&d)))?;
            Ok(Status::Certificate)
        }
    }
}

fn terminal_set(d: &Digraph, labels: Option<&[String]>) -> Result<VertexSet> {
    match labels {
        None => Ok(d.vertices().collect()),
        Some(labels) => labels
            .iter()
            .map(|l| d.index_of(l.trim()).ok_or_else(|| fail(Status::BadParameter, format!("unknown vertex `{l}`"))))
            .collect(),
    }
}

fn cmd_balsep(out: &Option<PathBuf>, t: Option<&[String]>, r: usize, s: usize, file: &Path, artifact: bool) -> Result<Status> {
    let d = read_graph(file)?;
    let t = terminal_set(&d, t)?;
    match balanced_separator(&BalancedSeparatorInstance::new(&d, &t, r, s))? {
        BalancedSeparatorResult::Separator(z) => {
            let text = if artifact {
                pretty(&json!({"T": d.labels_of(&t), "r": r, "Z": d.labels_of(&z)}))
            } else {
                format!("{}\n", json!(d.labels_of(&z)))
            };
            emit(out, &text)?;
            Ok(Status::Success)
        }
        BalancedSeparatorResult::Linked => {
            emit(out, "LINKED\n")?;
            Ok(Status::Certificate)
        }
    }
}

fn cmd_welllinked(out: &Option<PathBuf>, k: Option<usize>, file: &Path, system: Option<(usize, usize)>) -> Result<Status> {
    let k = match (k, system) {
        (Some(k), Some((l, p))) if k != 2 * l * p => {
            return Err(fail(Status::BadParameter, format!("a path system with l = {l}, p = {p} needs k = {}", 2 * l * p)))
        }
        (Some(k), _) => k,
        (None, Some((l, p))) => 2 * l * p,
        (None, None) => return Err(fail(Status::BadParameter, "give -k or both -l and -p")),
    };
    if k == 0 || system.is_some_and(|(l, p)| l == 0 || p == 0) {
        return Err(fail(Status::BadParameter, "parameters must be positive"));
    }
    let d = read_graph(file)?;
    if d.is_empty() {
        return Err(fail(Status::Parse, "the graph is empty"));
    }
    let order = g(k);
    let cert = match decompose(&d, order)? {
        Decomposition::Certificate(c) => c,
        Decomposition::Decomposition(dec) => {
            return Err(fail(
                Status::Thin,
                format!("decomposition of width {} at parameter {order}; no linked set to extract from", dec.width()),
            ))
        }
    };
    let w = well_linked_set(&d, &cert, k)?;
    let a = w.anchor_set();
    if a.len() <= VERIFY_LIMIT && !verify_well_linked(&d, &a) {
        anyhow::bail!("extracted anchors failed the well-linkedness check");
    }
    let mut value = w.to_json(&d);
    if let Some((l, p)) = system {
        let sys = build_path_system(&d, &w.path, &a, l, p)?;
        value["system"] = sys.to_json(&d);
    }
    eprintln!("well-linked set of {} on a path of {} vertices", a.len(), w.path.len());
    emit(out, &pretty(&value))?;
    Ok(Status::Success)
}

fn cmd_gen(out: &Option<PathBuf>, family: &str, n: usize, seed: u64) -> Result<Status> {
    let family: Family = family.parse().map_err(|e: String| fail(Status::BadParameter, e))?;
    if n == 0 {
        return Err(fail(Status::BadParameter, "size must be at least 1"));
    }
    emit(out, &generate(family, n, seed).to_edge_list())?;
    Ok(Status::Success)
}

fn run(cli: Cli) -> Result<Status> {
    let out = &cli.output;
    match cli.command {
        Command::Decompose { k, file, dot } => cmd_decompose(out, k, &file, dot.as_deref()),
        Command::Balsep {
            terminals,
            r,
            s,
            file,
            artifact,
        } => cmd_balsep(out, terminals.as_deref(), r, s, &file, artifact),
        Command::Welllinked { k, file, l, p } => cmd_welllinked(out, k, &file, l.zip(p)),
        Command::Validate { file, artifact } => {
            let d = read_graph(&file)?;
            let report = artifact::validate_file(&d, &artifact)?;
            emit(out, &report.text)?;
            Ok(if report.valid { Status::Success } else { Status::Invalid })
        }
        Command::Gen { family, n, seed } => cmd_gen(out, &family, n, seed),
        Command::Bench { suite, brute_cap } => {
            let cap = bench::BruteCap::parse(brute_cap.as_deref())?;
            let text = bench::run_suite(&suite, cap)?;
            emit(out, &text)?;
            Ok(Status::Success)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let status = e.downcast_ref::<Failure>().map_or(Status::Invalid, |f| f.status);
            ExitCode::from(status as u8)
        }
    }
}
