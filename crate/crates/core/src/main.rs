use std::io::{self, BufRead, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use unigraphs::classes::{member, ClassSpec};
use unigraphs::degseq::{bipartitions_of, enumerate_realizations, BipartitionedPair, DegreeSequence};
use unigraphs::graph::bits;
use unigraphs::miner::{mine_forbidden, verify_theorem};
use unigraphs::rao::{enumerate_minimal_pairs, is_rao_minimal, rao_contains, sequence_rao_contains};
use unigraphs::unigraph::{compose, decompose, CompositionTerm, UnigraphOracle};
use unigraphs::{Error, Graph};

/// Degree sequences, unigraphs, and hereditary unigraph classes.
///
/// Graphs are read and written as graph6, one per line. A graph argument may
/// be a file of graph6 lines, a single graph6 string, or omitted to read
/// standard input. Degree sequences use caret runs, e.g. "4,3,2^4,1".
#[derive(Parser)]
#[command(name = "unigraphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph class: all, bipartite, kpartite:K, chordal, split, perfect.
    #[arg(long, global = true, default_value = "all")]
    class: ClassSpec,

    /// Stop after this many results where a command enumerates.
    #[arg(long, global = true)]
    limit: Option<usize>,

    /// Vertex bound for sweeps and minimality checks.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Exit with status 1 when a yes/no query answers no.
    #[arg(long, global = true)]
    strict: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "UNIGRAPHS_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// One realization of a degree sequence (Havel–Hakimi).
    Realize { sequence: DegreeSequence },
    /// All realizations of a degree sequence in the class, up to isomorphism.
    Enumerate { sequence: DegreeSequence },
    /// Bipartitioned pairs of a degree sequence that have bipartite realizations.
    Bipartitions { sequence: DegreeSequence },
    /// Class membership.
    Check { input: Option<String> },
    /// Whether each graph is the only realization of its degree sequence in the class.
    Unigraph { input: Option<String> },
    /// Whether each graph is a hereditary unigraph relative to the class.
    Hereditary { input: Option<String> },
    /// Compose split terms onto a tail graph. A term is `<graph6>:<clique vertices>`.
    Compose {
        #[arg(required = true)]
        terms: Vec<String>,
        /// Tail graph in graph6.
        #[arg(long)]
        tail: String,
    },
    /// Split decomposition.
    Decompose { input: Option<String> },
    /// Whether BIG contains SMALL in the bipartite order. BIG may be a pair
    /// "(a|b)" or a degree sequence.
    RaoContains { big: String, small: BipartitionedPair },
    /// Test one pair for minimality, or list every minimal forbidden pair.
    RaoMinimal { pair: Option<BipartitionedPair> },
    /// Minimal forbidden induced subgraphs of the hereditary class.
    Mine,
    /// Run an exhaustive check of a theorem.
    Verify { theorem: String },
    /// Canonical form of each graph.
    Canon { input: Option<String> },
    /// Complement of each graph.
    Complement { input: Option<String> },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Capacity { .. }) { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Returns false when `--strict` is set and some answer was negative.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let out = io::stdout();
    let mut out = out.lock();
    let mut all_true = true;
    match &cli.command {
        Command::Realize { sequence } => {
            let g = sequence.realize()?;
            if cli.json {
                emit_json(&mut out, &json!({"degseq": sequence, "g6": g}))?;
            } else {
                writeln!(out, "{g}")?;
            }
        }
        Command::Enumerate { sequence } => {
            let graphs: Vec<Graph> = enumerate_realizations(sequence, None)?
                .into_iter()
                .filter(|g| member(g, cli.class))
                .take(cli.limit.unwrap_or(usize::MAX))
                .collect();
            graph_lines(&mut out, cli.json, &graphs)?;
        }
        Command::Bipartitions { sequence } => {
            let pairs = bipartitions_of(sequence);
            if cli.json {
                emit_json(&mut out, &pairs)?;
            } else {
                for p in pairs {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Check { input } => {
            let answers: Vec<(Graph, bool)> = read_graphs(input.as_deref())?
                .into_iter()
                .map(|g| {
                    let v = member(&g, cli.class);
                    (g, v)
                })
                .collect();
            all_true = bool_lines(&mut out, cli.json, &answers)?;
        }
        Command::Unigraph { input } => {
            let oracle = UnigraphOracle::new(cli.class);
            let mut answers = Vec::new();
            for g in read_graphs(input.as_deref())? {
                let v = oracle.is_unigraph(&g)?;
                answers.push((g, v));
            }
            all_true = bool_lines(&mut out, cli.json, &answers)?;
        }
        Command::Hereditary { input } => {
            let oracle = UnigraphOracle::new(cli.class);
            let mut answers = Vec::new();
            for g in read_graphs(input.as_deref())? {
                let v = oracle.is_hereditary(&g)?;
                answers.push((g, v));
            }
            all_true = bool_lines(&mut out, cli.json, &answers)?;
        }
        Command::Compose { terms, tail } => {
            let terms = terms.iter().map(|t| parse_term(t)).collect::<Result<Vec<_>, _>>()?;
            let g = compose(&terms, &tail.parse()?)?;
            graph_lines(&mut out, cli.json, &[g])?;
        }
        Command::Decompose { input } => {
            let decs: Vec<_> = read_graphs(input.as_deref())?.iter().map(decompose).collect();
            if cli.json {
                emit_json(&mut out, &decs)?;
            } else {
                for d in decs {
                    for t in &d.terms {
                        let k: Vec<String> = bits(t.partition.clique).map(|v| v.to_string()).collect();
                        writeln!(out, "term {}:{}", t.graph, k.join(","))?;
                    }
                    writeln!(out, "tail {}", d.tail)?;
                }
            }
        }
        Command::RaoContains { big, small } => {
            let v = if big.contains('|') {
                rao_contains(&big.parse()?, small)?
            } else {
                sequence_rao_contains(&big.parse()?, small)?
            };
            all_true = bool_value(&mut out, cli.json, v)?;
        }
        Command::RaoMinimal { pair } => {
            let bound = cli.max_n.unwrap_or(unigraphs::rao::DEFAULT_UNIVERSE_BOUND);
            match pair {
                Some(p) => all_true = bool_value(&mut out, cli.json, is_rao_minimal(p, bound)?)?,
                None => {
                    let records = enumerate_minimal_pairs(bound)?;
                    if cli.json {
                        emit_json(&mut out, &records)?;
                    } else {
                        for r in records {
                            let gs: Vec<String> = r.realizations.iter().map(Graph::to_graph6).collect();
                            writeln!(out, "{} {}", r.pair, gs.join(","))?;
                        }
                    }
                }
            }
        }
        Command::Mine => {
            let report = mine_forbidden(cli.class, cli.max_n.unwrap_or(7))?;
            if cli.json {
                emit_json(&mut out, &report)?;
            } else {
                for f in &report.forbidden {
                    match &f.label {
                        Some(l) => writeln!(out, "{} {} {} {}", f.g6, f.degseq, f.n, l)?,
                        None => writeln!(out, "{} {} {}", f.g6, f.degseq, f.n)?,
                    }
                }
            }
            all_true = report.counterexamples.is_empty() || !cli.strict;
        }
        Command::Verify { theorem } => {
            let report = verify_theorem(theorem, cli.max_n.unwrap_or(7))?;
            if cli.json {
                emit_json(&mut out, &report)?;
            } else {
                writeln!(
                    out,
                    "{} max_n={} checked={} counterexamples={} ({} ms)",
                    report.theorem,
                    report.max_n,
                    report.checked,
                    report.counterexamples.len(),
                    report.wall_clock_ms
                )?;
                for c in &report.counterexamples {
                    writeln!(out, "{c}")?;
                }
            }
            all_true = report.passed() || !cli.strict;
        }
        Command::Canon { input } => {
            let graphs: Vec<Graph> = read_graphs(input.as_deref())?.iter().map(Graph::canonical_form).collect();
            graph_lines(&mut out, cli.json, &graphs)?;
        }
        Command::Complement { input } => {
            let graphs: Vec<Graph> = read_graphs(input.as_deref())?.iter().map(Graph::complement).collect();
            graph_lines(&mut out, cli.json, &graphs)?;
        }
    }
    out.flush()?;
    Ok(all_true || !cli.strict)
}

fn parse_term(text: &str) -> Result<CompositionTerm, Failure> {
    let (g6, clique) = text.split_once(':').ok_or_else(|| Failure {
        code: 2,
        message: format!("term {text:?} should look like <graph6>:<clique vertices>"),
    })?;
    let graph: Graph = g6.parse()?;
    let mut vertices = Vec::new();
    for v in clique.split(',').map(str::trim).filter(|v| !v.is_empty()) {
        vertices.push(v.parse::<usize>().map_err(|_| Failure {
            code: 2,
            message: format!("bad vertex {v:?} in term {text:?}"),
        })?);
    }
    Ok(CompositionTerm::with_clique(graph, &vertices)?)
}

fn read_graphs(input: Option<&str>) -> Result<Vec<Graph>, Failure> {
    let text = match input {
        Some(arg) if Path::new(arg).exists() => std::fs::read_to_string(arg)?,
        Some(arg) => return Ok(vec![arg.parse()?]),
        None => {
            let mut s = String::new();
            for line in io::stdin().lock().lines() {
                s.push_str(&line?);
                s.push('\n');
            }
            s
        }
    };
    let mut graphs = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        graphs.push(line.parse()?);
    }
    Ok(graphs)
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn graph_lines(out: &mut impl Write, json: bool, graphs: &[Graph]) -> Result<(), Failure> {
    if json {
        emit_json(out, &graphs)
    } else {
        for g in graphs {
            writeln!(out, "{g}")?;
        }
        Ok(())
    }
}

fn bool_lines(out: &mut impl Write, json: bool, answers: &[(Graph, bool)]) -> Result<bool, Failure> {
    if json {
        let rows: Vec<_> = answers.iter().map(|(g, v)| json!({"g6": g, "value": v})).collect();
        emit_json(out, &rows)?;
    } else {
        for (_, v) in answers {
            writeln!(out, "{v}")?;
        }
    }
    Ok(answers.iter().all(|(_, v)| *v))
}

fn bool_value(out: &mut impl Write, json: bool, v: bool) -> Result<bool, Failure> {
    if json {
        emit_json(out, &json!({ "value": v }))?;
    } else {
        writeln!(out, "{v}")?;
    }
    Ok(v)
}
