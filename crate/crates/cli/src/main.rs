mod gen;
mod source;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use packcrit::characterizations::{find_critical_caterpillar, verify_theorem, TheoremId, VerificationSummary};
use packcrit::criticality::{
    criticality_report_with, edge_deletion_lower_bound, edge_deletion_value_admissible, CriticalityError, ReportOptions,
};
use packcrit::exec::Execution;
use packcrit::families::{caterpillar, Label};
use packcrit::{emit_graph6, packing_chromatic_number_with, Edge, Graph, PackingColoring, SolveError, SolveOptions};

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "packcrit",
    version,
    about = "Packing chromatic numbers and packing-critical graphs"
)]
struct Cli {
    /// Worker threads for corpus work (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Time budget per solve, in seconds
    #[arg(long, global = true, value_name = "SECONDS")]
    timeout: Option<f64>,
    /// Include optimal colorings in the output
    #[arg(long, global = true)]
    witness: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Edge,
    Vertex,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Packing chromatic number of every graph6 line
    Chirho {
        /// graph6 file, '-' for standard input, or builtin:NAME
        #[arg(default_value = "-")]
        input: String,
    },
    /// Edge and/or vertex deletion profile and criticality
    Critical {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Write a graph family as graph6 lines
    Gen {
        family: String,
        params: Vec<usize>,
        /// Write the vertex/edge labels of each graph as JSON lines to PATH
        #[arg(long, value_name = "PATH")]
        labels: Option<PathBuf>,
    },
    /// Check a characterization against brute-force criticality on a corpus
    Verify {
        /// diam2, block-diam2, block-diam3, tree-equivalence,
        /// class-c-4critical, small-critical-2, small-critical-3
        theorem: String,
        /// graph6 file, '-' for standard input, or builtin:NAME
        #[arg(long, default_value = "-")]
        corpus: String,
    },
    /// Search for an edge-critical caterpillar with the given χρ
    Caterpillar {
        k: usize,
        #[arg(long, default_value_t = 48)]
        max_spine: usize,
        #[arg(long, default_value_t = 6)]
        max_leaves: usize,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Disagreement,
    Timeout,
}

impl Status {
    fn exit(self) -> ExitCode {
        match self {
            Status::Ok => ExitCode::SUCCESS,
            Status::Disagreement => ExitCode::from(EXIT_DISAGREEMENT),
            Status::Timeout => ExitCode::from(EXIT_TIMEOUT),
        }
    }

    fn worst(self, other: Status) -> Status {
        match (self, other) {
            (Status::Disagreement, _) | (_, Status::Disagreement) => Status::Disagreement,
            (Status::Timeout, _) | (_, Status::Timeout) => Status::Timeout,
            _ => Status::Ok,
        }
    }
}

#[derive(Serialize)]
struct RunReport<T: Serialize> {
    command: Vec<String>,
    input_digest: String,
    status: Status,
    results: T,
    timing_ms: u128,
    version: &'static str,
}

struct Ctx {
    format: Format,
    witness: bool,
    solve: SolveOptions,
    started: Instant,
    out: BufWriter<io::StdoutLock<'static>>,
}

impl Ctx {
    fn report<T: Serialize>(&mut self, raw: &[u8], status: Status, results: T) -> Result<(), Failure> {
        let report = RunReport {
            command: std::env::args().skip(1).collect(),
            input_digest: format!("sha256:{:x}", Sha256::digest(raw)),
            status,
            results,
            timing_ms: self.started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION"),
        };
        serde_json::to_writer(&mut self.out, &report).map_err(io::Error::from)?;
        writeln!(self.out)?;
        Ok(())
    }

    fn line(&mut self, fields: &[String]) -> Result<(), Failure> {
        writeln!(self.out, "{}", fields.join("\t"))?;
        Ok(())
    }
}

#[derive(Serialize)]
struct ChiRow {
    graph: String,
    n: usize,
    status: Status,
    chi_rho: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PackingColoring>,
}

fn cmd_chirho(ctx: &mut Ctx, input: &str) -> Result<Status, Failure> {
    let loaded = source::load(input)?;
    let (solve, witness) = (&ctx.solve, ctx.witness);
    let rows = Execution::Parallel.map(&loaded.graphs, |g| {
        let graph = emit_graph6(g);
        match packing_chromatic_number_with(g, solve) {
            Ok(r) => ChiRow {
                graph,
                n: g.n(),
                status: Status::Ok,
                chi_rho: Some(r.value),
                witness: witness.then_some(r.witness),
            },
            Err(_) => ChiRow {
                graph,
                n: g.n(),
                status: Status::Timeout,
                chi_rho: None,
                witness: None,
            },
        }
    });
    let status = rows.iter().fold(Status::Ok, |s, r| s.worst(r.status));
    match ctx.format {
        Format::Json => ctx.report(&loaded.raw, status, &rows)?,
        Format::Tsv => {
            ctx.line(&["graph".into(), "n".into(), "chi_rho".into(), "witness".into()])?;
            for r in &rows {
                ctx.line(&[
                    r.graph.clone(),
                    r.n.to_string(),
                    r.chi_rho.map_or("timeout".into(), |v| v.to_string()),
                    r.witness.as_ref().map_or(String::new(), |w| join(w.colors())),
                ])?;
            }
        }
    }
    Ok(status)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct EdgeRow {
    edge: Edge,
    value: usize,
    drop: usize,
    within_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PackingColoring>,
}

#[derive(Serialize)]
struct VertexRow {
    vertex: usize,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PackingColoring>,
}

#[derive(Serialize)]
struct CriticalRow {
    graph: String,
    status: Status,
    chi_rho: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PackingColoring>,
    /// ⌈(χρ+1)/2⌉, the smallest admissible χρ(G − e) apart from K2.
    lower_bound: Option<usize>,
    bound_violations: Vec<Edge>,
    edges: Vec<EdgeRow>,
    vertices: Vec<VertexRow>,
    is_edge_critical: Option<bool>,
    is_vertex_critical: Option<bool>,
}

fn critical_row(g: &Graph, mode: Mode, solve: &SolveOptions, witness: bool) -> CriticalRow {
    let opts = ReportOptions {
        edges: mode != Mode::Vertex,
        vertices: mode != Mode::Edge,
        witnesses: witness,
        exec: Execution::Sequential,
        solve: solve.clone(),
    };
    let graph = emit_graph6(g);
    let r = match criticality_report_with(g, &opts) {
        Ok(r) => r,
        Err(CriticalityError::Solve(SolveError::TimedOut)) => {
            return CriticalRow {
                graph,
                status: Status::Timeout,
                chi_rho: None,
                witness: None,
                lower_bound: None,
                bound_violations: Vec::new(),
                edges: Vec::new(),
                vertices: Vec::new(),
                is_edge_critical: None,
                is_vertex_critical: None,
            }
        }
        Err(e) => unreachable!("edges and vertices come from the graph itself: {e}"),
    };
    let chi = r.chi_rho;
    let edges: Vec<EdgeRow> = r
        .edge_values
        .into_iter()
        .map(|ev| EdgeRow {
            edge: ev.edge,
            value: ev.value,
            drop: chi - ev.value,
            within_bound: edge_deletion_value_admissible(chi, ev.value),
            witness: ev.witness,
        })
        .collect();
    let bound_violations: Vec<Edge> = edges.iter().filter(|e| !e.within_bound).map(|e| e.edge).collect();
    CriticalRow {
        graph,
        status: if bound_violations.is_empty() {
            Status::Ok
        } else {
            Status::Disagreement
        },
        chi_rho: Some(chi),
        witness: r.witness,
        lower_bound: Some(edge_deletion_lower_bound(chi)),
        bound_violations,
        edges,
        vertices: r
            .vertex_values
            .into_iter()
            .map(|vv| VertexRow {
                vertex: vv.vertex,
                value: vv.value,
                witness: vv.witness,
            })
            .collect(),
        is_edge_critical: r.is_edge_critical,
        is_vertex_critical: r.is_vertex_critical,
    }
}

fn cmd_critical(ctx: &mut Ctx, input: &str, mode: Mode) -> Result<Status, Failure> {
    let loaded = source::load(input)?;
    let (solve, witness) = (&ctx.solve, ctx.witness);
    let rows = Execution::Parallel.map(&loaded.graphs, |g| critical_row(g, mode, solve, witness));
    let status = rows.iter().fold(Status::Ok, |s, r| s.worst(r.status));
    match ctx.format {
        Format::Json => ctx.report(&loaded.raw, status, &rows)?,
        Format::Tsv => {
            ctx.line(&[
                "graph".into(),
                "chi_rho".into(),
                "edge_values".into(),
                "vertex_values".into(),
                "edge_critical".into(),
                "vertex_critical".into(),
            ])?;
            let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
            for r in &rows {
                let ev: Vec<usize> = r.edges.iter().map(|e| e.value).collect();
                let vv: Vec<usize> = r.vertices.iter().map(|v| v.value).collect();
                ctx.line(&[
                    r.graph.clone(),
                    r.chi_rho.map_or("timeout".into(), |v| v.to_string()),
                    join(&ev),
                    join(&vv),
                    opt(r.is_edge_critical),
                    opt(r.is_vertex_critical),
                ])?;
            }
        }
    }
    Ok(status)
}

#[derive(Serialize)]
struct LabelLine<'a> {
    graph: &'a str,
    labels: &'a std::collections::BTreeMap<String, Label>,
}

fn cmd_gen(ctx: &mut Ctx, family: &str, params: &[usize], labels: Option<PathBuf>) -> Result<Status, Failure> {
    let graphs = gen::generate(family, params)?;
    let mut sidecar = match &labels {
        Some(path) => {
            Some(BufWriter::new(fs::File::create(path).map_err(|e| {
                Failure::Usage(format!("creating {}: {e}", path.display()))
            })?))
        }
        None => None,
    };
    for lg in &graphs {
        let line = emit_graph6(&lg.graph);
        writeln!(ctx.out, "{line}")?;
        if let Some(w) = sidecar.as_mut() {
            serde_json::to_writer(
                &mut *w,
                &LabelLine {
                    graph: &line,
                    labels: &lg.labels,
                },
            )
            .map_err(io::Error::from)?;
            writeln!(w)?;
        }
    }
    if let Some(mut w) = sidecar {
        w.flush()?;
    }
    Ok(Status::Ok)
}

fn cmd_verify(ctx: &mut Ctx, theorem: &str, corpus: &str) -> Result<Status, Failure> {
    let id: TheoremId = theorem
        .parse()
        .map_err(|e: packcrit::characterizations::CharacterizationError| {
            Failure::Usage(format!("{e}; known: {}", TheoremId::ALL.map(|t| t.as_str()).join(", ")))
        })?;
    let loaded = source::load(corpus)?;
    let summary = verify_theorem(id, &loaded.graphs, Execution::Parallel, &ctx.solve)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let status = verdict_status(&summary);
    match ctx.format {
        Format::Json => {
            for d in &summary.disagreements {
                serde_json::to_writer(&mut ctx.out, d).map_err(io::Error::from)?;
                writeln!(ctx.out)?;
            }
            ctx.report(&loaded.raw, status, &summary)?;
        }
        Format::Tsv => {
            ctx.line(&[
                "theorem".into(),
                "total".into(),
                "checked".into(),
                "skipped".into(),
                "disagreements".into(),
                "timed_out".into(),
                "positives".into(),
            ])?;
            ctx.line(&[
                id.to_string(),
                summary.total.to_string(),
                summary.checked.to_string(),
                summary.skipped.to_string(),
                summary.disagreements.len().to_string(),
                summary.timed_out.len().to_string(),
                summary.positives.len().to_string(),
            ])?;
            for d in &summary.disagreements {
                ctx.line(&[
                    "disagreement".into(),
                    d.graph.clone(),
                    d.structural_verdict.to_string(),
                    d.ground_truth.to_string(),
                ])?;
            }
        }
    }
    Ok(status)
}

fn verdict_status(s: &VerificationSummary) -> Status {
    if !s.disagreements.is_empty() {
        Status::Disagreement
    } else if !s.timed_out.is_empty() {
        Status::Timeout
    } else {
        Status::Ok
    }
}

#[derive(Serialize)]
struct CaterpillarResult {
    k: usize,
    found: bool,
    leaves: Option<Vec<usize>>,
    graph: Option<String>,
    n: Option<usize>,
    chi_rho: Option<usize>,
    edge_critical: Option<bool>,
}

fn cmd_caterpillar(ctx: &mut Ctx, k: usize, max_spine: usize, max_leaves: usize) -> Result<Status, Failure> {
    let (found, mut status) = match find_critical_caterpillar(k, max_spine, max_leaves, &ctx.solve) {
        Ok(found) => (found, Status::Disagreement),
        Err(_) => (None, Status::Timeout),
    };
    let mut result = CaterpillarResult {
        k,
        found: found.is_some(),
        leaves: None,
        graph: None,
        n: None,
        chi_rho: None,
        edge_critical: None,
    };
    if let Some(leaves) = found {
        let g = caterpillar(&leaves);
        let opts = ReportOptions {
            vertices: false,
            solve: ctx.solve.clone(),
            ..ReportOptions::default()
        };
        match criticality_report_with(&g, &opts) {
            Ok(r) => {
                if r.chi_rho == k && r.edge_critical() {
                    status = Status::Ok;
                }
                result.chi_rho = Some(r.chi_rho);
                result.edge_critical = r.is_edge_critical;
            }
            Err(_) => status = Status::Timeout,
        }
        result.graph = Some(emit_graph6(&g));
        result.n = Some(g.n());
        result.leaves = Some(leaves);
    }
    match ctx.format {
        Format::Json => ctx.report(format!("{k} {max_spine} {max_leaves}").as_bytes(), status, &result)?,
        Format::Tsv => {
            ctx.line(&["k".into(), "leaves".into(), "graph".into(), "edge_critical".into()])?;
            ctx.line(&[
                k.to_string(),
                result.leaves.as_deref().map_or("-".into(), join),
                result.graph.clone().unwrap_or_else(|| "-".into()),
                result.edge_critical.map_or("-".into(), |b| b.to_string()),
            ])?;
        }
    }
    Ok(status)
}

fn run(cli: Cli) -> Result<Status, Failure> {
    let solve = match cli.timeout {
        None => SolveOptions::default(),
        Some(s) if s.is_finite() && s >= 0.0 => SolveOptions::with_time_limit(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::Usage(format!("invalid --timeout {s}"))),
    };
    let mut ctx = Ctx {
        format: cli.format,
        witness: cli.witness,
        solve,
        started: Instant::now(),
        out: BufWriter::new(io::stdout().lock()),
    };
    let status = match cli.command {
        Command::Chirho { input } => cmd_chirho(&mut ctx, &input),
        Command::Critical { input, mode } => cmd_critical(&mut ctx, &input, mode),
        Command::Gen { family, params, labels } => cmd_gen(&mut ctx, &family, &params, labels),
        Command::Verify { theorem, corpus } => cmd_verify(&mut ctx, &theorem, &corpus),
        Command::Caterpillar {
            k,
            max_spine,
            max_leaves,
        } => cmd_caterpillar(&mut ctx, k, max_spine, max_leaves),
    }?;
    ctx.out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| run(cli)),
            Err(e) => Err(Failure::Usage(format!("thread pool: {e}"))),
        },
        None => run(cli),
    };
    match outcome {
        Ok(status) => status.exit(),
        Err(Failure::Usage(msg)) => {
            eprintln!("packcrit: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("packcrit: parse error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("packcrit: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
