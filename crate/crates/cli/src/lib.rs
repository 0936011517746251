//! Batch front end for `cyclecut`.
//!
//! Every subcommand writes its records to stdout, one per line, and keeps
//! diagnostics on stderr. The exit code says how the run ended:
//!
//! | status                  | code |
//! |-------------------------|------|
//! | ok                      | 0    |
//! | input error             | 1    |
//! | hypothesis violation    | 2    |
//! | counterexamples found   | 3    |

use std::fs::File;
use std::io::{BufRead, Cursor, Read, Write};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclecut::constructions::NamedGraph;
use cyclecut::cuts::{find_cut_of_kind, CutKind};
use cyclecut::enumerate::{count_by_edges, enumerate_graphs, EnumerationConstraints, Graph6Reader};
use cyclecut::search::{run_harness, GraphSource, Harness, SearchReport};
use cyclecut::verifier::{verify_edge_bound, BoundReport, HypothesisViolation};
use cyclecut::{
    all_neighborhoods_cyclic, induces_forest, is_independent_set, is_k_connected, k4_substitution,
    to_edge_list, vertex_connectivity, EdgeListReader, Graph, VertexSet,
};

/// Environment variable holding the default worker count for `search`.
pub const JOBS_ENV: &str = "CYCLECUT_JOBS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    HypothesisViolation,
    CounterexamplesFound,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::HypothesisViolation => 2,
            Status::CounterexamplesFound => 3,
        }
    }
}

/// What a subcommand produced: its status, the stdout records, and any
/// warnings for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub records: Vec<String>,
    pub warnings: Vec<String>,
}

impl CommandResult {
    fn ok(records: Vec<String>) -> Self {
        CommandResult { status: Status::Ok, records, warnings: Vec::new() }
    }

    fn with_status(status: Status, records: Vec<String>) -> Self {
        CommandResult { status, records, warnings: Vec::new() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cyclecut", version, about = "Cuts, connectivity and neighborhood-cycle bounds for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    G6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Book,
    Prism,
    K4sub,
    Complete,
    Cycle,
    Octahedron,
    Petersen,
}

#[derive(clap::Args, Debug)]
struct ConstraintArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    min_connectivity: Option<usize>,
    #[arg(long)]
    min_edges: Option<usize>,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Keep only graphs whose every neighborhood contains a cycle.
    #[arg(long)]
    nbhd_cycles: bool,
}

impl ConstraintArgs {
    fn constraints(&self) -> EnumerationConstraints {
        EnumerationConstraints {
            n: self.n,
            connected_only: self.connected,
            min_degree: self.min_degree,
            min_connectivity: self.min_connectivity,
            min_edges: self.min_edges,
            max_edges: self.max_edges,
            require_neighborhood_cycles: self.nbhd_cycles,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph family.
    Construct {
        family: Family,
        /// Size parameter (pages, cycle length, order); also accepted as `family:param`.
        param: Option<usize>,
        /// Base graph for k4sub, e.g. `prism:3`, `petersen`, or `-` for graph6 on stdin.
        #[arg(long)]
        base: Option<String>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Test a property of each input graph.
    Check {
        /// three-connected | nbhd-cycles | min-degree:K | independent-set | forest
        #[arg(long)]
        property: String,
        /// Vertex set for independent-set / forest, e.g. `0,2,5`.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value = "g6")]
        input_format: InputFormat,
    },
    /// Search each input graph for an independent or forest cut.
    Cut {
        #[arg(long)]
        kind: CutKind,
        #[arg(long, value_enum, default_value = "g6")]
        input_format: InputFormat,
    },
    /// Run the edge-bound argument on each input graph.
    VerifyProof {
        #[arg(long, value_enum, default_value = "g6")]
        input_format: InputFormat,
    },
    /// Run an exhaustive harness.
    Search {
        #[arg(long)]
        harness: Harness,
        #[arg(long)]
        n: usize,
        /// graph6 list to scan instead of native generation (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
        /// Worker threads; output does not depend on this.
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
    },
    /// Count non-isomorphic graphs meeting constraints.
    Stats {
        #[command(flatten)]
        constraints: ConstraintArgs,
    },
    /// List non-isomorphic graphs meeting constraints.
    Enumerate {
        #[command(flatten)]
        constraints: ConstraintArgs,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
}

#[derive(Serialize)]
struct GraphJson {
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => g.to_graph6(),
        Format::Edges => to_edge_list(g).trim_end().to_string(),
        Format::Json => {
            let j = GraphJson { graph6: g.to_graph6(), n: g.n(), m: g.m(), edges: g.edges().collect() };
            serde_json::to_string(&j).expect("graph serializes")
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("record serializes")
}

fn read_graphs(stdin: &mut dyn BufRead, format: InputFormat) -> anyhow::Result<Vec<Graph>> {
    match format {
        InputFormat::G6 => Graph6Reader::new(stdin).map(|r| r.map_err(anyhow::Error::from)).collect(),
        InputFormat::Edges => EdgeListReader::new(stdin).map(|r| r.map_err(anyhow::Error::from)).collect(),
    }
}

fn parse_family(family: Family, param: Option<usize>) -> anyhow::Result<NamedGraph> {
    let need = |what: &str| param.ok_or_else(|| anyhow!("{family:?} needs a {what} parameter"));
    let named = match family {
        Family::Book => NamedGraph::Book(need("page count")?),
        Family::Prism => NamedGraph::Prism(need("cycle length")?),
        Family::Complete => NamedGraph::Complete(need("vertex count")?),
        Family::Cycle => NamedGraph::Cycle(need("length")?),
        Family::Octahedron | Family::Petersen if param.is_some() => bail!("{family:?} takes no parameter"),
        Family::Octahedron => NamedGraph::Octahedron,
        Family::Petersen => NamedGraph::Petersen,
        Family::K4sub => unreachable!("handled by caller"),
    };
    Ok(named)
}

fn construct(
    family: Family,
    param: Option<usize>,
    base: Option<String>,
    format: Format,
    stdin: &mut dyn BufRead,
) -> anyhow::Result<CommandResult> {
    if family != Family::K4sub {
        if base.is_some() {
            bail!("--base only applies to k4sub");
        }
        let g = parse_family(family, param)?.build()?;
        return Ok(CommandResult::ok(vec![render(&g, format)]));
    }
    if param.is_some() {
        bail!("k4sub takes its base via --base");
    }
    let base = base.ok_or_else(|| anyhow!("k4sub needs --base"))?;
    let bases = if base == "-" {
        read_graphs(stdin, InputFormat::G6)?
    } else {
        vec![base.parse::<NamedGraph>()?.build()?]
    };
    let mut result = CommandResult::ok(Vec::with_capacity(bases.len()));
    for h in &bases {
        let (g, map) = k4_substitution(h)?;
        if !map.base_three_connected {
            result.warnings.push(format!("base {} is not 3-connected; neither is the result", h.to_graph6()));
        }
        result.records.push(render(&g, format));
    }
    Ok(result)
}

/// Splits `name` or `name:param` into the family and an optional parameter.
fn split_family_arg(args: Vec<String>) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len() + 1);
    let mut iter = args.into_iter();
    let mut after_construct = false;
    for a in iter.by_ref() {
        if after_construct && !a.starts_with('-') {
            if let Some((fam, p)) = a.split_once(':') {
                out.push(fam.to_string());
                out.push(p.to_string());
            } else {
                out.push(a);
            }
            break;
        }
        after_construct = a == "construct";
        out.push(a);
    }
    out.extend(iter);
    out
}

#[derive(Serialize)]
struct CheckRecord {
    graph6: String,
    property: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    connectivity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_degree: Option<usize>,
}

enum Property {
    ThreeConnected,
    NbhdCycles,
    MinDegree(usize),
    IndependentSet(Vec<usize>),
    Forest(Vec<usize>),
}

fn parse_set(set: Option<&str>) -> anyhow::Result<Vec<usize>> {
    let set = set.ok_or_else(|| anyhow!("this property needs --set"))?;
    set.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad vertex {s:?} in --set")))
        .collect()
}

fn parse_property(p: &str, set: Option<&str>) -> anyhow::Result<Property> {
    Ok(match p {
        "three-connected" => Property::ThreeConnected,
        "nbhd-cycles" => Property::NbhdCycles,
        "independent-set" => Property::IndependentSet(parse_set(set)?),
        "forest" => Property::Forest(parse_set(set)?),
        _ => match p.strip_prefix("min-degree:") {
            Some(k) => Property::MinDegree(k.parse().with_context(|| format!("bad degree in {p:?}"))?),
            None => bail!("unknown property {p:?}"),
        },
    })
}

fn check(property: &str, set: Option<&str>, graphs: &[Graph]) -> anyhow::Result<CommandResult> {
    let prop = parse_property(property, set)?;
    let mut records = Vec::with_capacity(graphs.len());
    for g in graphs {
        let mut rec = CheckRecord {
            graph6: g.to_graph6(),
            property: property.to_string(),
            holds: false,
            connectivity: None,
            min_degree: None,
        };
        match &prop {
            Property::ThreeConnected => {
                rec.holds = is_k_connected(g, 3);
                rec.connectivity = Some(vertex_connectivity(g));
            }
            Property::NbhdCycles => rec.holds = all_neighborhoods_cyclic(g),
            Property::MinDegree(k) => {
                let d = g.min_degree().unwrap_or(0);
                rec.holds = g.n() == 0 || d >= *k;
                rec.min_degree = Some(d);
            }
            Property::IndependentSet(vs) => {
                rec.holds = is_independent_set(g, &VertexSet::from_vertices(g.n(), vs.iter().copied())?)?
            }
            Property::Forest(vs) => rec.holds = induces_forest(g, &VertexSet::from_vertices(g.n(), vs.iter().copied())?)?,
        }
        records.push(json(&rec));
    }
    Ok(CommandResult::ok(records))
}

#[derive(Serialize)]
struct CutRecord {
    graph6: String,
    kind: CutKind,
    found: bool,
    cut: Option<Vec<usize>>,
    components_after_removal: Option<usize>,
}

fn cut(kind: CutKind, graphs: &[Graph]) -> CommandResult {
    let records = graphs
        .iter()
        .map(|g| {
            let cert = find_cut_of_kind(g, kind);
            json(&CutRecord {
                graph6: g.to_graph6(),
                kind,
                found: cert.is_some(),
                cut: cert.as_ref().map(|c| c.cut.to_vec()),
                components_after_removal: cert.as_ref().map(|c| c.component_count_after_removal),
            })
        })
        .collect();
    CommandResult::ok(records)
}

#[derive(Serialize)]
struct ProofRecord {
    graph6: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<HypothesisViolation>,
    #[serde(flatten)]
    report: Option<BoundReport>,
}

fn verify_proof(graphs: &[Graph]) -> CommandResult {
    let mut status = Status::Ok;
    let records = graphs
        .iter()
        .map(|g| {
            let rec = match verify_edge_bound(g) {
                Ok(report) => ProofRecord { graph6: g.to_graph6(), status: Status::Ok, violation: None, report: Some(report) },
                Err(v) => {
                    status = Status::HypothesisViolation;
                    ProofRecord {
                        graph6: g.to_graph6(),
                        status: Status::HypothesisViolation,
                        violation: Some(v),
                        report: None,
                    }
                }
            };
            json(&rec)
        })
        .collect();
    CommandResult::with_status(status, records)
}

fn search(
    harness: Harness,
    n: usize,
    input: Option<String>,
    jobs: Option<usize>,
    stdin: &mut dyn BufRead,
) -> anyhow::Result<CommandResult> {
    // The stream is buffered up front so the scan can move to a worker pool.
    let mut data = Vec::new();
    match input.as_deref() {
        None => {}
        Some("-") => {
            stdin.read_to_end(&mut data).context("reading stdin")?;
        }
        Some(path) => {
            File::open(path).and_then(|mut f| f.read_to_end(&mut data)).with_context(|| format!("reading {path}"))?;
        }
    }
    let source = || match input {
        None => GraphSource::Native,
        Some(_) => GraphSource::Stream(Box::new(Cursor::new(&data[..]))),
    };
    let report: SearchReport = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(|| run_harness(harness, n, source()))?,
        None => run_harness(harness, n, source())?,
    };
    let status = if report.has_counterexamples() { Status::CounterexamplesFound } else { Status::Ok };
    Ok(CommandResult::with_status(status, vec![json(&report)]))
}

#[derive(Serialize)]
struct StatsRecord {
    n: usize,
    constraints: EnumerationConstraints,
    count: usize,
    by_edges: std::collections::BTreeMap<usize, usize>,
}

fn stats(args: &ConstraintArgs) -> anyhow::Result<CommandResult> {
    let constraints = args.constraints();
    let by_edges = count_by_edges(&constraints)?;
    let count = by_edges.values().sum();
    Ok(CommandResult::ok(vec![json(&StatsRecord { n: args.n, constraints, count, by_edges })]))
}

fn enumerate(args: &ConstraintArgs, format: Format) -> anyhow::Result<CommandResult> {
    let graphs = enumerate_graphs(&args.constraints())?;
    Ok(CommandResult::ok(graphs.iter().map(|g| render(g, format)).collect()))
}

fn dispatch(command: Command, stdin: &mut dyn BufRead) -> anyhow::Result<CommandResult> {
    match command {
        Command::Construct { family, param, base, format } => construct(family, param, base, format, stdin),
        Command::Check { property, set, input_format } => {
            let graphs = read_graphs(stdin, input_format)?;
            check(&property, set.as_deref(), &graphs)
        }
        Command::Cut { kind, input_format } => Ok(cut(kind, &read_graphs(stdin, input_format)?)),
        Command::VerifyProof { input_format } => Ok(verify_proof(&read_graphs(stdin, input_format)?)),
        Command::Search { harness, n, input, jobs } => search(harness, n, input, jobs, stdin),
        Command::Stats { constraints } => stats(&constraints),
        Command::Enumerate { constraints, format } => enumerate(&constraints, format),
    }
}

/// Runs one invocation and returns its exit code. `args` includes the
/// program name, as with `std::env::args`.
pub fn run_command<I, S>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = split_family_arg(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                Status::InputError.exit_code()
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(result) => {
            for w in &result.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            for r in &result.records {
                if writeln!(stdout, "{r}").is_err() {
                    return Status::InputError.exit_code();
                }
            }
            result.status.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            Status::InputError.exit_code()
        }
    }
}
