//! `cusphyp`: decide hyperbolicity of triangulated 3-manifolds with torus
//! boundary, one file at a time or a whole batch.

use std::collections::{BTreeMap, HashSet};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, ValueEnum};
use cusp_core::decide::{is_hyperbolic, Status, Verdict};
use cusp_core::format::{from_isosig, looks_like_isosig, parse_gluing_table, parse_triangulation_spec};
use cusp_core::recognition::Budget;
use cusp_core::{Result, Triangulation};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cusphyp", version, about = "Decide whether a 3-manifold with torus boundary is hyperbolic")]
struct Args {
    /// Triangulation file (gluing table or isomorphism signature), or a
    /// batch file with --batch. Use `-` for standard input.
    input: PathBuf,
    /// Read `name<TAB>triangulation` lines, one entry per line.
    #[arg(long)]
    batch: bool,
    /// Include fault certificates in the output.
    #[arg(long)]
    certificate: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest triangulation, after truncation, on which surfaces are enumerated.
    #[arg(long, default_value_t = 64)]
    max_tets: usize,
    /// Largest number of vertex or fundamental solutions per enumeration.
    #[arg(long, default_value_t = 100_000)]
    max_solutions: usize,
    /// Number of worker threads for batches.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write per-stage candidate counts to standard error.
    #[arg(long)]
    oracle_dump: bool,
}

struct Entry {
    name: String,
    parsed: Result<Triangulation>,
}

enum Outcome {
    Verdict(Verdict),
    Error(String),
}

fn read_input(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_single(text: &str) -> Result<Triangulation> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    if let [(line, only)] = lines.as_slice() {
        let only = only.trim();
        if looks_like_isosig(only) {
            return from_isosig(only).map_err(|e| match e {
                cusp_core::Error::Parse { message, .. } => cusp_core::Error::Parse { line: *line, message },
                other => other,
            });
        }
    }
    parse_gluing_table(text, 1)
}

fn parse_batch(text: &str) -> Vec<Entry> {
    let mut names = HashSet::new();
    content_lines(text)
        .map(|(line, l)| {
            let Some((name, spec)) = l.split_once('\t') else {
                let message = "expected `name<TAB>triangulation`".to_string();
                return Entry { name: format!("line {line}"), parsed: Err(cusp_core::Error::Parse { line, message }) };
            };
            let name = name.trim().to_string();
            let parsed = if names.insert(name.clone()) {
                parse_triangulation_spec(spec, line)
            } else {
                Err(cusp_core::Error::Parse { line, message: format!("duplicate name `{name}`") })
            };
            Entry { name, parsed }
        })
        .collect()
}

fn run_all(entries: &[Entry], budget: &Budget, jobs: usize) -> Vec<Outcome> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Outcome>>> = Mutex::new((0..entries.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(entries.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(entry) = entries.get(i) else { break };
                let outcome = match &entry.parsed {
                    Ok(t) => Outcome::Verdict(is_hyperbolic(t, budget)),
                    Err(e) => Outcome::Error(e.to_string()),
                };
                results.lock().expect("results lock")[i] = Some(outcome);
            });
        }
    });
    results.into_inner().expect("results lock").into_iter().map(|o| o.expect("every entry ran")).collect()
}

fn text_line(name: &str, outcome: &Outcome, certificate: bool) -> String {
    match outcome {
        Outcome::Error(e) => format!("{name}: ERROR ({e})"),
        Outcome::Verdict(v) => {
            let mut s = format!("{name}: {}", v.status.as_str());
            if let Some(r) = &v.reason {
                s.push_str(&format!(" ({r})"));
            }
            if let (true, Some(c)) = (certificate, &v.certificate) {
                let entries: Vec<String> = c.fault.surface.entries.iter().map(|x| x.to_string()).collect();
                s.push_str(&format!(
                    "\n  certificate: stage={} branch={} euler={} coords={}",
                    serde_json::to_value(c.stage).expect("stage").as_str().unwrap_or_default(),
                    serde_json::to_value(c.fault.branch).expect("branch").as_str().unwrap_or_default(),
                    c.fault.report.euler,
                    entries.join(",")
                ));
            }
            s
        }
    }
}

fn json_line(name: &str, outcome: &Outcome, certificate: bool) -> Value {
    match outcome {
        Outcome::Error(e) => json!({ "name": name, "status": "ERROR", "reason": e }),
        Outcome::Verdict(v) => {
            let mut obj = serde_json::to_value(v).expect("verdict serialises");
            let map = obj.as_object_mut().expect("verdict is an object");
            if !certificate {
                map.remove("certificate");
            }
            map.insert("name".into(), json!(name));
            obj
        }
    }
}

fn status_key(o: &Outcome) -> &'static str {
    match o {
        Outcome::Error(_) => "ERROR",
        Outcome::Verdict(v) => v.status.as_str(),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_input(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cusphyp: cannot read {}: {e}", args.input.display());
            return ExitCode::from(1);
        }
    };
    let entries = if args.batch {
        parse_batch(&text)
    } else {
        let name = args.input.file_stem().map_or("stdin".into(), |s| s.to_string_lossy().into_owned());
        let name = if args.input.as_os_str() == "-" { "stdin".to_string() } else { name };
        vec![Entry { name, parsed: parse_single(&text) }]
    };
    let budget = Budget { max_tets: args.max_tets, max_solutions: args.max_solutions };
    let outcomes = run_all(&entries, &budget, args.jobs);

    let mut counts: BTreeMap<&str, usize> =
        ["HYPERBOLIC", "NOT_HYPERBOLIC", "PRECONDITION_FAILED", "RESOURCE_EXCEEDED", "ERROR"].map(|k| (k, 0)).into();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (entry, outcome) in entries.iter().zip(&outcomes) {
        *counts.get_mut(status_key(outcome)).expect("known status") += 1;
        let line = match args.format {
            Format::Text => text_line(&entry.name, outcome, args.certificate),
            Format::Json => json_line(&entry.name, outcome, args.certificate).to_string(),
        };
        let _ = writeln!(out, "{line}");
        if let (true, Outcome::Verdict(v)) = (args.oracle_dump, outcome) {
            let stages: Vec<String> = v
                .trace
                .iter()
                .map(|e| format!("{}={}", serde_json::to_value(e.stage).expect("stage").as_str().unwrap_or_default(), e.candidates))
                .collect();
            eprintln!("{}: candidates {}", entry.name, stages.join(" "));
        }
    }
    let order = ["HYPERBOLIC", "NOT_HYPERBOLIC", "PRECONDITION_FAILED", "RESOURCE_EXCEEDED", "ERROR"];
    let summary = match args.format {
        Format::Text => {
            let parts: Vec<String> = order.iter().map(|k| format!("{k}={}", counts[k])).collect();
            format!("summary: {}", parts.join(" "))
        }
        Format::Json => {
            let m: serde_json::Map<String, Value> = order.iter().map(|k| (k.to_string(), json!(counts[k]))).collect();
            json!({ "summary": m }).to_string()
        }
    };
    let _ = writeln!(out, "{summary}");
    let _ = out.flush();

    if counts["ERROR"] > 0 {
        ExitCode::from(1)
    } else if outcomes.iter().any(|o| matches!(o, Outcome::Verdict(v) if v.status == Status::ResourceExceeded)) {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
