//! `es-kit`: chromatic index, stability index and sweep front end.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eskit_core::coloring::{chi_prime_with, ChiOptions};
use eskit_core::graph::{canonical_edge, encode_edge_list, encode_graph6, generate, parse_edge_list, parse_graph6};
use eskit_core::stability::{
    all_min_mitigating_sets, bipartite_matching_transform, es_exact, is_mitigating, two_matching_transform,
    verify_conjecture1, SearchMode,
};
use eskit_core::theorems::{sweep_with, Check, SweepConfig, DEFAULT_BUDGET_NMAX};
use eskit_core::{Edge, EdgeSet, Error, FamilySpec, Graph};
use serde_json::json;

const BUDGET_ENV: &str = "ES_KIT_BUDGET_NMAX";

#[derive(Parser, Debug)]
#[command(
    name = "es-kit",
    version,
    about = "Chromatic index and chromatic edge stability of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `graph6` and `edges` apply to `gen` only.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for the randomised choices a sweep makes.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic index, class and how it was decided.
    Chi {
        #[command(flatten)]
        input: Input,
        /// Skip the structural shortcuts and always run the exact search.
        #[arg(long)]
        no_fast_paths: bool,
    },
    /// Stability index with a minimum mitigating set.
    Es {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// List every minimum mitigating set.
        #[arg(long)]
        all_witnesses: bool,
        /// Also report whether some minimum mitigating set is a matching.
        #[arg(long)]
        conjecture: bool,
        /// Turn the given mitigating set, e.g. "1-2,2-3", into a matching.
        #[arg(long, value_name = "EDGES")]
        transform: Option<String>,
    },
    /// Run the characterisation checks on every small graph.
    Sweep {
        #[arg(long, default_value_t = DEFAULT_BUDGET_NMAX)]
        nmax: usize,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all", value_name = "NAME|all")]
        check: String,
    },
    /// Build a family member from a spec such as "complete(4)".
    Gen { spec: String },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    #[arg(long, value_name = "S")]
    graph6: Option<String>,
    /// Edge-list file, or `-` for standard input.
    #[arg(long, value_name = "FILE")]
    edges: Option<String>,
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    MatchingOnly,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => SearchMode::Exact,
            Mode::MatchingOnly => SearchMode::MatchingOnly,
        }
    }
}

/// A failed run and its exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(String),
    Transform(String),
    Sweep,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Transform(_) => 4,
            Failure::Sweep => 5,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Edgeless | Error::Precondition(_) | Error::NoClosedForm(_) => Failure::Domain(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn load(input: &Input) -> Result<Graph, Failure> {
    if let Some(s) = &input.graph6 {
        return Ok(parse_graph6(s)?);
    }
    if let Some(spec) = &input.family {
        return Ok(generate(&spec.parse::<FamilySpec>()?)?);
    }
    let path = input.edges.as_deref().expect("clap enforces one input");
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    Ok(parse_edge_list(&text)?)
}

fn text_or_json(format: Option<Format>) -> Result<bool, Failure> {
    match format.unwrap_or(Format::Text) {
        Format::Text => Ok(false),
        Format::Json => Ok(true),
        f => Err(Failure::Input(
            format!("--format {f:?} is only valid for gen").to_lowercase(),
        )),
    }
}

fn edges_text(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_edge_arg(g: &Graph, s: &str) -> Result<EdgeSet, Failure> {
    let bad = |part: &str| Failure::Input(format!("bad edge {part:?}: expected u-v"));
    let mut edges = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = part.split_once('-').ok_or_else(|| bad(part))?;
        let u: usize = u.trim().parse().map_err(|_| bad(part))?;
        let v: usize = v.trim().parse().map_err(|_| bad(part))?;
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(Failure::Input(format!("{part} is not an edge of the graph")));
        }
        edges.push(canonical_edge(u, v));
    }
    Ok(EdgeSet::new(g, edges)?)
}

fn cmd_chi(out: &mut impl Write, input: &Input, no_fast_paths: bool, json: bool) -> Run {
    let g = load(input)?;
    let v = chi_prime_with(
        &g,
        ChiOptions {
            fast_paths: !no_fast_paths,
        },
    )?;
    if json {
        let doc = json!({
            "chi_prime": v.chi_prime,
            "class": v.class.number(),
            "decided_by": v.decided_by.as_str(),
            "witness": v.witness.to_json(),
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "chi_prime={} class={}", v.chi_prime, v.class.number())?;
        writeln!(out, "decided_by={}", v.decided_by.as_str())?;
    }
    Ok(())
}

struct EsRequest<'a> {
    mode: Mode,
    all_witnesses: bool,
    conjecture: bool,
    transform: Option<&'a str>,
}

fn cmd_transform(out: &mut impl Write, g: &Graph, set_text: &str, json: bool) -> Run {
    let set = parse_edge_arg(g, set_text)?;
    let (kind, result) = if g.is_bipartite() {
        ("bipartite", bipartite_matching_transform(g, &set))
    } else if set.len() == 2 {
        ("two_matching", two_matching_transform(g, &set))
    } else {
        return Err(Failure::Transform(format!(
            "the graph is not bipartite and the set has {} edges; only mitigating pairs can be transformed",
            set.len()
        )));
    };
    let m = result.map_err(|e| Failure::Transform(e.to_string()))?;
    let mitigating = is_mitigating(g, m.as_edge_set())?;
    if json {
        let doc = json!({"transform": kind, "input": set, "matching": m, "mitigating": mitigating});
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "transform={kind}")?;
        writeln!(out, "input={}", edges_text(set.edges()))?;
        writeln!(out, "matching={}", edges_text(m.edges()))?;
        writeln!(out, "mitigating={mitigating}")?;
    }
    Ok(())
}

fn cmd_es(out: &mut impl Write, input: &Input, req: EsRequest, json: bool) -> Run {
    let g = load(input)?;
    if let Some(t) = req.transform {
        if g.is_edgeless() {
            return Err(Error::Edgeless.into());
        }
        return cmd_transform(out, &g, t, json);
    }
    let report = es_exact(&g, req.mode.into())?;
    let all = if req.all_witnesses {
        Some(all_min_mitigating_sets(&g)?)
    } else {
        None
    };
    let verdict = if req.conjecture {
        Some(verify_conjecture1(&g)?)
    } else {
        None
    };
    if json {
        let mut doc = serde_json::to_value(&report).expect("report serialises");
        if let Some(all) = &all {
            doc["all_witnesses"] = json!(all);
        }
        if let Some(v) = &verdict {
            doc["conjecture"] = json!(v);
        }
        writeln!(out, "{doc}")?;
        return Ok(());
    }
    writeln!(out, "es={}", report.es)?;
    writeln!(out, "mode={}", report.mode)?;
    writeln!(out, "witness={}", edges_text(report.witness.edges()))?;
    writeln!(out, "witness_is_matching={}", report.witness_is_matching)?;
    match &report.matching_witness {
        Some(m) => writeln!(out, "matching_witness={}", edges_text(m.edges()))?,
        None => writeln!(out, "matching_witness=none")?,
    }
    writeln!(out, "subsets_tested={}", report.subsets_tested)?;
    if let Some(all) = &all {
        writeln!(out, "min_sets={}", all.len())?;
        for s in all {
            writeln!(out, "min_set={}", edges_text(s.edges()))?;
        }
    }
    if let Some(v) = &verdict {
        writeln!(out, "has_matching_min_witness={}", v.has_matching_min_witness)?;
    }
    Ok(())
}

fn budget() -> Result<usize, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{BUDGET_ENV}={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET_NMAX),
    }
}

fn cmd_sweep(out: &mut impl Write, nmax: usize, check: &str, seed: Option<u64>) -> Run {
    let checks = Check::parse_list(check).map_err(|e| Failure::Input(e.to_string()))?;
    let cfg = SweepConfig {
        n_min: 1,
        n_max: nmax,
        checks,
        budget: budget()?,
        seed,
    };
    let start = Instant::now();
    let outcome = sweep_with(&cfg)?;
    let wall = start.elapsed();
    for v in &outcome.verdicts {
        writeln!(out, "{}", serde_json::to_string(v).expect("verdict serialises"))?;
    }
    let s = &outcome.summary;
    let summary = json!({"summary": {
        "n_max": nmax,
        "graphs": s.graphs,
        "verdicts": s.verdicts,
        "passed": s.passed,
        "failed": s.failed,
        "per_check": s.per_check,
        "wall_seconds": wall.as_secs_f64(),
    }});
    writeln!(out, "{summary}")?;
    if s.failed > 0 {
        return Err(Failure::Sweep);
    }
    Ok(())
}

fn cmd_gen(out: &mut impl Write, spec: &str, format: Option<Format>) -> Run {
    let spec: FamilySpec = spec.parse()?;
    let g = generate(&spec).map_err(|e| Failure::Input(e.to_string()))?;
    match format.unwrap_or(Format::Graph6) {
        Format::Graph6 => writeln!(out, "{}", encode_graph6(&g)?)?,
        Format::Edges => write!(out, "{}", encode_edge_list(&g))?,
        Format::Text => {
            writeln!(out, "spec={spec}")?;
            writeln!(out, "n={} m={}", g.n(), g.m())?;
            writeln!(out, "graph6={}", encode_graph6(&g)?)?;
        }
        Format::Json => {
            let doc = json!({"spec": spec.to_string(), "n": g.n(), "m": g.m(),
                             "graph6": encode_graph6(&g)?, "edges": g.edges()});
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Run {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Input(format!("--jobs {jobs}: {e}")))?;
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Chi { input, no_fast_paths } => cmd_chi(&mut out, input, *no_fast_paths, text_or_json(cli.format)?),
        Command::Es {
            input,
            mode,
            all_witnesses,
            conjecture,
            transform,
        } => {
            let req = EsRequest {
                mode: *mode,
                all_witnesses: *all_witnesses,
                conjecture: *conjecture,
                transform: transform.as_deref(),
            };
            cmd_es(&mut out, input, req, text_or_json(cli.format)?)
        }
        Command::Sweep { nmax, check } => cmd_sweep(&mut out, *nmax, check, cli.seed),
        Command::Gen { spec } => cmd_gen(&mut out, spec, cli.format),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) | Failure::Domain(m) | Failure::Transform(m) => {
                    eprintln!("es-kit: {m}")
                }
                Failure::Sweep => eprintln!("es-kit: sweep found failing verdicts"),
            }
            ExitCode::from(f.code())
        }
    }
}
