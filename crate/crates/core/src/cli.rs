//! The `hyperinfect` command line.
//!
//! Commands print JSON unless `--pretty` asks for a short human summary;
//! commands that produce a hypergraph print it in the text format (or
//! `--format json`). Vertex labels are 1-based everywhere.
//!
//! Exit codes: 0 success, 1 bad input or parameters, 2 search budget
//! exceeded, 3 verification found failures.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::designs;
use crate::error::{Error, Result};
use crate::families;
use crate::hypergraph::Hypergraph;
use crate::infection;
use crate::io::{self, Format};
use crate::products;
use crate::solver::{self, SolverConfig};
use crate::verify::{self, VerifyOptions};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyperinfect", version, about = "Infection closure, exact infection numbers and hypergraph constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

/// Where and how a produced hypergraph is written.
#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long, value_name = "FILE", global = true)]
    output: Option<String>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutFormat,
}

#[derive(Debug, Args)]
struct Solve {
    /// Minimum witness size for the m-infection rule.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Worker threads for the seed search; results do not depend on it.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family member.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        out: Output,
    },
    /// Exact (m-)infection number with a minimum witness.
    Number {
        /// Input file (`-` for standard input).
        file: String,
        #[command(flatten)]
        solve: Solve,
        /// Include the infection trace of the witness.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Derived set of a seed.
    Infect {
        file: String,
        /// Comma-separated 1-based labels, e.g. `1,3`.
        #[arg(long, value_name = "LABELS")]
        seed: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Include every infection event.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Remove every edge contained in another edge.
    Reduce {
        file: String,
        #[command(flatten)]
        out: Output,
    },
    /// Connected components with their vertex labels.
    Components {
        file: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Line graph, or with `--inverse` the adjacency hypergraph of a graph.
    Linegraph {
        file: String,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Product constructions; `join1` takes a single input.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        a: String,
        b: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Structural checks.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Re-derive the closed-form results by exact search.
    Verify {
        /// Case id, id prefix or tag.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the randomized property suite instead of the theorem registry.
        #[arg(long)]
        properties: bool,
        /// Random instances per property case.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Cases evaluated concurrently; the report keeps registry order.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Check that every extremal infection set leaves its uninfected vertices inside an edge.
    Conjecture {
        file: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductKind {
    Direct,
    Cartesian,
    WeakCorona,
    StrongCorona,
    Join1,
}

#[derive(Debug, Subcommand)]
enum CheckKind {
    /// Whether every t-subset lies in the same number of edges.
    Design {
        #[arg(long)]
        t: usize,
        file: String,
    },
    /// Uniformity, linearity, reducedness, degrees, connectivity.
    Structure { file: String },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// All k-subsets of n vertices.
    Complete { n: usize, k: usize },
    /// Complete multipartite hypergraph with the given part sizes.
    Multipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Petals sharing a common core.
    Flower {
        #[arg(long, default_value_t = 1)]
        core: usize,
        /// Private vertices per petal.
        #[arg(required = true)]
        extras: Vec<usize>,
    },
    /// Intervals `START:LEN` (1-based) on a path of n vertices.
    Interval {
        n: usize,
        #[arg(required = true, value_parser = parse_interval)]
        intervals: Vec<(usize, usize)>,
    },
    /// Ring of edges; `--overlaps` gives |E_i ∩ E_{i+1}|.
    Hypercycle {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        overlaps: Vec<usize>,
    },
    /// Arcs of length k stepping by k - t around n vertices.
    TightCycle { n: usize, k: usize, t: usize },
    /// (k-1)-subsets of the first n-1 vertices, each with vertex n added.
    Augmented { n: usize, k: usize },
    /// n vertices, no edges.
    Trivial { n: usize },
    /// Points and lines of PG(n, q) for prime q.
    Pg { n: usize, q: u64 },
    /// Path graph on n vertices.
    Path { n: usize },
    /// Cycle graph on n vertices.
    Cycle { n: usize },
    /// Layered k-uniform extension of FILE with infection number 1.
    Extension { file: String },
}

fn parse_interval(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected START:LEN, got {s:?}"))?;
    let start = a.trim().parse().map_err(|_| format!("bad start in {s:?}"))?;
    let len = b.trim().parse().map_err(|_| format!("bad length in {s:?}"))?;
    Ok((start, len))
}

/// Parses `1,3,4` into a 0-based vertex set of `h`.
pub fn parse_seed(h: &Hypergraph, labels: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for part in labels.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let label: usize = part.parse().map_err(|_| Error::InvalidParameters(format!("seed label {part:?} is not a number")))?;
        if label == 0 || label > h.num_vertices() {
            return Err(Error::VertexOutOfRange { label, n: h.num_vertices() });
        }
        set.insert(label - 1);
    }
    Ok(set)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn config(threads: usize) -> Result<SolverConfig> {
    Ok(SolverConfig::from_env()?.with_threads(threads))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn emit_hypergraph(out: &mut dyn Write, h: &Hypergraph, target: &Output) -> Result<()> {
    let mut text = io::write(h, target.format.into());
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &target.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{path}: {e}")))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn build_family(family: Family) -> Result<Hypergraph> {
    match family {
        Family::Complete { n, k } => families::complete(n, k),
        Family::Multipartite { parts } => families::complete_multipartite(&parts),
        Family::Flower { core, extras } => families::flower(core, &extras),
        Family::Interval { n, intervals } => families::interval(n, &intervals),
        Family::Hypercycle { sizes, overlaps } => families::hypercycle(&sizes, &overlaps),
        Family::TightCycle { n, k, t } => families::tight_cycle(n, k, t),
        Family::Augmented { n, k } => families::augmented_complete(n, k),
        Family::Trivial { n } => families::trivial(n),
        Family::Pg { n, q } => designs::pg_design(n, q),
        Family::Path { n } => families::path_graph(n),
        Family::Cycle { n } => families::cycle_graph(n),
        Family::Extension { file } => families::infection_one_extension(&io::load(&file)?),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen { family, out: target } => emit_hypergraph(out, &build_family(family)?, &target)?,
        Command::Number { file, solve, trace, pretty } => {
            let h = io::load(&file)?;
            let result = solver::infection_number_with(&h, solve.m, &config(solve.threads)?)?;
            if pretty {
                writeln!(out, "infection number (m = {}): {}", result.m, result.infection_number)?;
                writeln!(out, "witness: {}", result.witness)?;
                writeln!(out, "bounds: {} ..= {}", result.lower_bound_used, result.upper_bound_used)?;
                writeln!(out, "seeds enumerated: {}", result.enumerated_count)?;
                if trace {
                    write_events(out, &result.trace)?;
                }
            } else {
                let mut value = serde_json::to_value(&result)?;
                if trace {
                    value["trace"] = serde_json::to_value(&result.trace)?;
                }
                emit_json(out, &value)?;
            }
        }
        Command::Infect { file, seed, m, trace, pretty } => {
            let h = io::load(&file)?;
            let seed = parse_seed(&h, &seed)?;
            let t = infection::closure(&h, &seed, m)?;
            let complete = t.is_complete(&h);
            if pretty {
                writeln!(out, "derived set: {} ({} of {} vertices)", t.final_set, t.final_set.len(), h.num_vertices())?;
                if trace {
                    write_events(out, &t)?;
                }
            } else {
                let mut value = json!({ "seed": t.seed, "m": m, "derived": t.final_set, "complete": complete });
                if trace {
                    value["events"] = serde_json::to_value(&t.events)?;
                }
                emit_json(out, &value)?;
            }
        }
        Command::Reduce { file, out: target } => emit_hypergraph(out, &io::load(&file)?.reduce(), &target)?,
        Command::Components { file, pretty } => {
            let h = io::load(&file)?;
            let comps = h.components();
            if pretty {
                for c in &comps {
                    let vertices = VertexSet::from(c.mapping.as_slice());
                    writeln!(out, "{vertices}: {} edges", c.hypergraph.num_edges())?;
                }
            } else {
                let list: Vec<Value> = comps
                    .iter()
                    .map(|c| {
                        json!({
                            "vertices": c.mapping.iter().map(|v| v + 1).collect::<Vec<_>>(),
                            "hypergraph": verify::instance_json(&c.hypergraph),
                        })
                    })
                    .collect();
                emit_json(out, &list)?;
            }
        }
        Command::Linegraph { file, inverse, out: target } => {
            let h = io::load(&file)?;
            let result = if inverse { h.adjacency_hypergraph()? } else { h.line_graph()? };
            emit_hypergraph(out, &result, &target)?;
        }
        Command::Product { kind, a, b, out: target } => {
            let ha = io::load(&a)?;
            let second = || -> Result<Hypergraph> {
                let path = b.as_deref().ok_or_else(|| Error::InvalidParameters("this product needs two inputs".into()))?;
                io::load(path)
            };
            let product = match kind {
                ProductKind::Direct => products::direct_product(&ha, &second()?)?,
                ProductKind::Cartesian => products::cartesian_product(&ha, &second()?)?,
                ProductKind::WeakCorona => products::weak_corona(&ha, &second()?)?,
                ProductKind::StrongCorona => products::strong_corona(&ha, &second()?)?,
                ProductKind::Join1 => {
                    if b.is_some() {
                        return Err(Error::InvalidParameters("join1 takes a single input".into()));
                    }
                    products::join_universal_vertex(&ha)?
                }
            };
            emit_hypergraph(out, &product.hypergraph, &target)?;
        }
        Command::Check { what } => match what {
            CheckKind::Design { t, file } => emit_json(out, &designs::is_t_design(&io::load(&file)?, t)?)?,
            CheckKind::Structure { file } => emit_json(out, &io::load(&file)?.structure())?,
        },
        Command::Verify { filter, seed, properties, count, threads, json } => {
            let budget = SolverConfig::from_env()?.budget;
            let opts = VerifyOptions { filter, seed, budget, count, threads: threads.max(1) };
            let report = if properties { verify::run_properties(&opts)? } else { verify::run_verification(&opts)? };
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_pretty())?;
            }
            return Ok(if report.is_success() { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Conjecture { file, threads } => {
            let h = io::load(&file)?;
            emit_json(out, &solver::check_conjecture_with(&h, &config(threads)?)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_events(out: &mut dyn Write, trace: &infection::InfectionTrace) -> Result<()> {
    for (i, ev) in trace.events.iter().enumerate() {
        writeln!(out, "  {:>3}. {} fires edge #{} -> {}", i + 1, ev.witness, ev.edge_index + 1, ev.newly_infected)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hyperinfect").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_writes_text() {
        let (code, out, _) = call(&["gen", "complete", "3", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "vertices 3\nedge 1 2\nedge 1 3\nedge 2 3\n");
        let (_, out, _) = call(&["gen", "interval", "6", "1:3", "3:3", "5:2", "--format", "json"]);
        assert_eq!(out.trim(), r#"{"vertices":6,"edges":[[5,6],[1,2,3],[3,4,5]]}"#);
    }

    #[test]
    fn bad_arguments_exit_one() {
        assert_eq!(call(&["gen", "complete", "3"]).0, EXIT_INPUT);
        assert_eq!(call(&["number", "x.hg", "--bogus"]).0, EXIT_INPUT);
        assert_eq!(call(&["gen", "complete", "2", "3"]).0, EXIT_INPUT);
        assert_eq!(call(&["number", "/nonexistent/file.hg"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn seed_parsing() {
        let h = families::complete(4, 2).unwrap();
        assert_eq!(parse_seed(&h, "1, 3").unwrap(), VertexSet::from([0, 2]));
        assert!(parse_seed(&h, "0").is_err());
        assert!(parse_seed(&h, "5").is_err());
        assert!(parse_seed(&h, "a").is_err());
    }

    #[test]
    fn failing_verification_exits_three() {
        let (code, out, _) = call(&["verify", "--filter", "tight-cycle-n-k+1", "--json"]);
        assert_eq!(code, EXIT_VERIFY);
        assert!(out.contains("\"status\":\"fail\""));
        assert_eq!(call(&["verify", "--filter", "complete"]).0, EXIT_OK);
    }
}
