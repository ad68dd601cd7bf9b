//! Job runner behind the command-line interface.
//!
//! A [`JobSpec`] names one command, a topology, output settings and
//! budgets; [`run`] executes it and reports a process exit code. Reports
//! are deterministic: equal specs on the same build produce byte-identical
//! output files.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::flip::{build_flip_graph, components};
use crate::forcing::{forcing_results_csv, forcing_spectrum};
use crate::grid::{build_grid, GridGraph, Kind, Topology};
use crate::matching::{ascii_tiling, enumerate_with_budget, matchings_to_json, Budget};
use crate::verify::{run_suite, suite_to_json, Tier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_TOPOLOGY: i32 = 2;
pub const EXIT_BUDGET_EXCEEDED: i32 = 3;
pub const EXIT_VERIFICATION_FAILURE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    FlipGraph,
    Spectrum,
    Forcing,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    AsciiTiling,
}

/// One unit of command-line work.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: Command,
    pub topology: Option<Topology>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub budget_matchings: Option<usize>,
    pub budget_seconds: Option<u64>,
    pub tier: Tier,
}

impl JobSpec {
    fn budget(&self) -> Budget {
        Budget {
            max_matchings: self.budget_matchings,
            deadline: self
                .budget_seconds
                .map(|s| Instant::now() + Duration::from_secs(s)),
        }
    }
}

/// Parses a paper-style graph name, `C:a,b` or `T:a,b`, into the grid
/// topology it denotes: `C:a,b` is the cylinder with a+1 vertex rows and
/// b vertex columns, `T:a,b` the torus with a rows and b columns.
pub fn parse_paper_name(name: &str) -> Result<Topology> {
    let bad = || Error::UnsupportedTopology {
        required: "a paper name of the form C:a,b or T:a,b",
    };
    let (kind, rest) = name.split_once(':').ok_or_else(bad)?;
    let (a, b) = rest.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    match kind.trim() {
        "C" | "c" => Topology::new(Kind::Cylinder, a + 1, b),
        "T" | "t" => Topology::new(Kind::Torus, a, b),
        _ => Err(bad()),
    }
}

fn graph_for(spec: &JobSpec) -> std::result::Result<GridGraph, i32> {
    match spec.topology {
        Some(t) => Ok(build_grid(t)),
        None => {
            eprintln!("error: this command needs a topology (--topology/--vrows/--vcols or --paper-name)");
            Err(EXIT_INVALID_TOPOLOGY)
        }
    }
}

fn emit(spec: &JobSpec, content: &str) -> i32 {
    match &spec.out {
        Some(path) => match std::fs::File::create(path).and_then(|mut f| f.write_all(content.as_bytes())) {
            Ok(()) => {
                eprintln!("wrote {}", path.display());
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_USAGE
            }
        },
        None => {
            if content.ends_with('\n') {
                print!("{content}");
            } else {
                println!("{content}");
            }
            EXIT_OK
        }
    }
}

fn unsupported(format: &'static str, object: &'static str) -> i32 {
    eprintln!("error: {}", Error::UnsupportedExport { format, object });
    EXIT_USAGE
}

fn run_enumerate(spec: &JobSpec) -> i32 {
    let g = match graph_for(spec) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (store, exceeded) = enumerate_with_budget(&g, spec.budget());
    let content = match spec.format {
        Format::Json => {
            let mut doc = matchings_to_json(&store);
            doc["budget_exceeded"] = serde_json::Value::Bool(exceeded);
            serde_json::to_string_pretty(&doc).unwrap()
        }
        Format::AsciiTiling => {
            let mut out = String::new();
            for (id, m) in store.iter().enumerate() {
                let _ = writeln!(out, "# matching {id}");
                out.push_str(&ascii_tiling(&g, m).unwrap());
                out.push('\n');
            }
            out
        }
        Format::Csv => return unsupported("csv", "matching list"),
        Format::Dot => return unsupported("dot", "matching list"),
    };
    let code = emit(spec, &content);
    if code == EXIT_OK && exceeded {
        EXIT_BUDGET_EXCEEDED
    } else {
        code
    }
}

fn run_flipgraph(spec: &JobSpec) -> i32 {
    let g = match graph_for(spec) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (store, exceeded) = enumerate_with_budget(&g, spec.budget());
    if exceeded {
        eprintln!("error: the flip graph needs the complete matching set and the budget cut enumeration short");
        return EXIT_BUDGET_EXCEEDED;
    }
    let flips = match build_flip_graph(&g, &store) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let content = match spec.format {
        Format::Json => {
            let report = components(&flips);
            let mut doc = report.to_json();
            doc["matchings"] = serde_json::Value::from(store.len());
            doc["flip_edges"] = serde_json::Value::from(flips.edge_count());
            serde_json::to_string_pretty(&doc).unwrap()
        }
        Format::Dot => flips.to_dot(),
        Format::Csv => return unsupported("csv", "flip graph"),
        Format::AsciiTiling => return unsupported("ascii-tiling", "flip graph"),
    };
    emit(spec, &content)
}

fn run_spectrum(spec: &JobSpec, per_matching: bool) -> i32 {
    let g = match graph_for(spec) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let keep = per_matching || spec.format == Format::Csv;
    let report = forcing_spectrum(&g, spec.budget(), keep);
    let content = match spec.format {
        Format::Json => {
            let mut doc = report.to_json(g.topology());
            if per_matching {
                doc["results"] = serde_json::to_value(report.per_matching.as_ref().unwrap()).unwrap();
            }
            serde_json::to_string_pretty(&doc).unwrap()
        }
        Format::Csv => forcing_results_csv(report.per_matching.as_deref().unwrap_or(&[])),
        Format::Dot => return unsupported("dot", "spectrum report"),
        Format::AsciiTiling => return unsupported("ascii-tiling", "spectrum report"),
    };
    let code = emit(spec, &content);
    if code == EXIT_OK && !report.authoritative {
        EXIT_BUDGET_EXCEEDED
    } else {
        code
    }
}

fn run_verify(spec: &JobSpec) -> i32 {
    let results = run_suite(spec.tier);
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        println!(
            "[{}] {:width$}  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.details,
        );
        eprintln!("      {:width$}  {} ms", r.name, r.millis);
    }
    let all = results.iter().all(|r| r.passed);
    println!(
        "{}: {}/{} checks passed",
        if all { "OK" } else { "FAILED" },
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    if let Some(path) = &spec.out {
        let doc = suite_to_json(&results, spec.tier);
        let body = serde_json::to_string_pretty(&doc).unwrap();
        if std::fs::write(path, body).is_err() {
            eprintln!("error: cannot write {}", path.display());
            return EXIT_USAGE;
        }
        eprintln!("wrote {}", path.display());
    }
    if all {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILURE
    }
}

/// Executes a job and returns the process exit code.
pub fn run(spec: &JobSpec) -> i32 {
    match spec.command {
        Command::Enumerate => run_enumerate(spec),
        Command::FlipGraph => run_flipgraph(spec),
        Command::Spectrum => run_spectrum(spec, false),
        Command::Forcing => run_spectrum(spec, true),
        Command::Verify => run_verify(spec),
    }
}
