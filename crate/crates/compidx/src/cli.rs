//! Command line front end: analyze one digraph, generate family members,
//! run the claim suite, or print a single m-step competition graph.
//!
//! Exit codes: 0 success, 1 the suite (or a replay) found a failing claim,
//! 2 usage or input errors, 3 internal invariant violations.

use crate::competition::{profile_with_window, CompetitionProfile};
use crate::connectivity::{primitivity, PrimitivityReport};
use crate::digraph::Digraph;
use crate::generate::{self, Seed};
use crate::sink::{sink_sequence, SinkSequence, TerminalKind};
use crate::structure::{vertex_type, VertexType};
use crate::verify::{check_instance, run_suite, Caps, SuiteConfig};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "compidx",
    version,
    about = "m-step competition graphs, sink elimination, and a claim suite over generated corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report on one digraph: sink sequence, competition profile, vertex
    /// types, primitivity.
    Analyze {
        /// digraph text file
        file: PathBuf,
        /// largest m exported to --dot (default: one full period window)
        #[arg(long)]
        mmax: Option<usize>,
        /// JSON destination; "-" for stdout
        #[arg(long, default_value = "-")]
        json: String,
        /// directory receiving digraph.dot and c1.dot .. c<mmax>.dot
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Write a digraph from one of the construction families.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the claim suite from a JSON config, or replay one saved instance.
    Verify {
        /// suite config JSON file
        config: Option<PathBuf>,
        /// re-check a single digraph file (e.g. a failure's serialized
        /// instance) instead of a whole corpus
        #[arg(long)]
        replay: Option<PathBuf>,
        /// report destination, overriding the config's "report"; "-" for
        /// stdout
        #[arg(long)]
        report: Option<String>,
        /// worker threads for the suite (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// DOT of the m-step competition graph of a digraph.
    Power {
        /// digraph text file
        file: PathBuf,
        /// step count m (at least 1)
        #[arg(short)]
        m: usize,
        /// DOT destination; "-" for stdout
        #[arg(long, default_value = "-")]
        dot: String,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Transitive tournament on n vertices.
    Transitive {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Tournament with a sink whose elimination count is exactly i.
    Zeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Layered acyclic build; --spec SIZES:PARTS, e.g. 2,1,2:0,1,0.
    AcyclicKpartite {
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Uniform random orientation of a complete multipartite graph.
    RandomKpartite {
        /// partite set sizes, comma separated
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// RNG seed; falls back to COMPIDX_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Random orientation resampled until it has a sink and a cycle.
    SinkCycle {
        /// partite set sizes, comma separated
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// RNG seed; falls back to COMPIDX_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10_000)]
        max_tries: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// output file; "-" for stdout
    #[arg(short, long, default_value = "-")]
    output: String,
}

enum CliError {
    Usage(String),
    Internal(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal invariant violation: {msg}");
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { file, mmax, json, dot } => analyze(&file, mmax, &json, dot.as_deref()),
        Command::Gen { family } => gen(family),
        Command::Verify { config, replay, report, jobs } => verify(config, replay, report, jobs),
        Command::Power { file, m, dot } => power(&file, m, &dot),
    }
}

fn read_digraph(path: &Path) -> Result<Digraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Digraph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_dest(dest: &str, content: &str) -> Result<(), CliError> {
    if dest == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(dest, content).map_err(|e| usage(format!("{dest}: {e}")))
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct VertexTypeEntry {
    vertex: usize,
    #[serde(rename = "type")]
    kind: VertexType,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<usize>>,
    sink_sequence: SinkSequence,
    profile: CompetitionProfile,
    vertex_types: Vec<VertexTypeEntry>,
    primitivity: PrimitivityReport,
}

fn analyze(
    file: &Path,
    mmax: Option<usize>,
    json_dest: &str,
    dot_dir: Option<&Path>,
) -> Result<i32, CliError> {
    let d = read_digraph(file)?;
    let ss = sink_sequence(&d);
    let (profile, win) = profile_with_window(&d);
    let parts = d.inferred_partition();
    let k = parts.as_ref().and_then(|p| p.iter().max().map(|&m| m + 1)).unwrap_or(0);

    let mut vertex_types = Vec::new();
    if k >= 2 && ss.terminal == TerminalKind::Empty && ss.zeta >= 1 {
        for w in 0..d.n() {
            if ss.layer_of(w).is_some_and(|i| i < ss.zeta) {
                let kind = vertex_type(&d, &ss, w).map_err(|e| CliError::Internal(e.to_string()))?;
                vertex_types.push(VertexTypeEntry { vertex: w, kind });
            }
        }
    }
    let prim = primitivity(&d).map_err(|e| CliError::Internal(e.to_string()))?;

    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        let last = mmax.unwrap_or(win.horizon() - 1).max(1);
        std::fs::write(dir.join("digraph.dot"), d.to_dot())
            .map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        for m in 1..=last {
            let path = dir.join(format!("c{m}.dot"));
            std::fs::write(&path, win.graph(m).to_dot())
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        }
    }

    let report = AnalyzeReport {
        n: d.n(),
        parts,
        sink_sequence: ss,
        profile,
        vertex_types,
        primitivity: prim,
    };
    write_dest(json_dest, &to_pretty_json(&report))?;
    Ok(0)
}

fn resolve_seed(flag: Option<u64>) -> Result<Seed, CliError> {
    if let Some(s) = flag {
        return Ok(Seed(s));
    }
    match std::env::var("COMPIDX_SEED") {
        Ok(v) => v
            .parse()
            .map(Seed)
            .map_err(|_| usage(format!("COMPIDX_SEED must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(Seed(0)),
    }
}

fn parse_layer_spec(spec: &str) -> Result<(Vec<usize>, Vec<usize>), CliError> {
    let (sizes, parts) = spec
        .split_once(':')
        .ok_or_else(|| usage("--spec wants SIZES:PARTS, e.g. 2,1,2:0,1,0"))?;
    let nums = |s: &str| -> Result<Vec<usize>, CliError> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("--spec has a non-numeric entry in {s:?}")))
    };
    Ok((nums(sizes)?, nums(parts)?))
}

fn gen(family: Family) -> Result<i32, CliError> {
    let (d, out) = match family {
        Family::Transitive { n, out } => (generate::transitive_tournament(n), out),
        Family::Zeta { n, i, out } => {
            (generate::zeta_tournament(n, i).map_err(|e| usage(e.to_string()))?, out)
        }
        Family::AcyclicKpartite { spec, out } => {
            let (sizes, parts) = parse_layer_spec(&spec)?;
            (generate::acyclic_kpartite(&sizes, &parts).map_err(|e| usage(e.to_string()))?, out)
        }
        Family::RandomKpartite { sizes, seed, out } => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(usage("--sizes must be nonempty and positive"));
            }
            (generate::random_kpartite(&sizes, resolve_seed(seed)?), out)
        }
        Family::SinkCycle { sizes, seed, max_tries, out } => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(usage("--sizes must be nonempty and positive"));
            }
            let d = generate::sink_cycle_kpartite(&sizes, resolve_seed(seed)?, max_tries)
                .map_err(|e| usage(e.to_string()))?;
            (d, out)
        }
    };
    write_dest(&out.output, &d.to_text())?;
    Ok(0)
}

fn load_config(path: &Path) -> Result<SuiteConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn verify(
    config: Option<PathBuf>,
    replay: Option<PathBuf>,
    report: Option<String>,
    jobs: Option<usize>,
) -> Result<i32, CliError> {
    if let Some(path) = replay {
        let caps = match config {
            Some(p) => load_config(&p)?.caps,
            None => Caps::default(),
        };
        let d = read_digraph(&path)?;
        let results = check_instance(&d, &caps);
        print!("{}", to_pretty_json(&results));
        return Ok(if results.iter().any(|r| r.applicable && !r.passed) { 1 } else { 0 });
    }
    let path = config.ok_or_else(|| usage("verify needs a suite config file or --replay"))?;
    let cfg = load_config(&path)?;
    let outcome = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| usage(format!("--jobs {j}: {e}")))?
            .install(|| run_suite(&cfg)),
        None => run_suite(&cfg),
    };
    let suite = outcome.map_err(|e| usage(e.to_string()))?;
    let dest = report.or_else(|| cfg.report.clone()).unwrap_or_else(|| "-".to_string());
    write_dest(&dest, &to_pretty_json(&suite))?;
    Ok(if suite.all_passed() { 0 } else { 1 })
}

fn power(file: &Path, m: usize, dot_dest: &str) -> Result<i32, CliError> {
    if m == 0 {
        return Err(usage("-m must be at least 1"));
    }
    let d = read_digraph(file)?;
    // the periodic window makes huge m cheap
    let (_, win) = profile_with_window(&d);
    write_dest(dot_dest, &win.graph(m).to_dot())?;
    Ok(0)
}
