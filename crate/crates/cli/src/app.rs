//! Subcommands, flags and exit codes.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclepack_core::duality::{self, EngineOptions, Verification};
use cyclepack_core::oracles::{self, EnumerationBudget, SearchMode, Target};
use cyclepack_core::widths::game::{play_cops_and_robbers, CopStrategy, Robber};
use cyclepack_core::widths::{WidthContext, WidthGraph};
use cyclepack_core::{BitSet, CycleGraph, EdgeCut, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::format::{parse_graph, parse_kind, AnyGraph, FormatError};
use crate::generate::generate;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "cyclepack", version, about = "Cycle packing and covering certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Graph file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Graph kind; for `generate` the kind to produce, otherwise checked
    /// against the file.
    #[arg(long, global = true)]
    pub kind: Option<String>,
    /// vertices=a,b | edges=e1,e2 | vertices=all | edges=all |
    /// vertices=random | edges=random | all
    #[arg(long, global = true, default_value = "all")]
    pub target: String,
    #[arg(long, global = true, default_value_t = 100_000)]
    pub budget_cycles: usize,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget_subsets: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = VerifyLevel::Oracle)]
    pub verify: VerifyLevel,
    /// Report path; standard output if absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyLevel {
    Off,
    Oracle,
    Exhaustive,
}

impl From<VerifyLevel> for Verification {
    fn from(v: VerifyLevel) -> Self {
        match v {
            VerifyLevel::Off => Verification::Off,
            VerifyLevel::Oracle => Verification::Oracle,
            VerifyLevel::Exhaustive => Verification::Exhaustive,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Packing and hitting set for the target.
    Duality,
    /// Porosity, cycle-width, Y sets and the cops and robbers game.
    Widths {
        #[command(subcommand)]
        which: WidthsCommand,
    },
    /// Brute-force searches.
    Search {
        #[command(subcommand)]
        which: SearchCommand,
    },
    /// Random graph from (n, m, seed).
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum WidthsCommand {
    /// Porosity of the cut with the given side.
    Porosity {
        /// Comma-separated vertex names.
        #[arg(long)]
        side: String,
    },
    /// Exact cycle-width over all cubic trees, up to --n-cap vertices.
    Cyclewidth {
        #[arg(long, default_value_t = 8)]
        n_cap: usize,
    },
    /// Optimal decomposition with its Y sets.
    Strategy {
        #[arg(long, default_value_t = 8)]
        n_cap: usize,
    },
    /// Plays the Y-set strategy, adversarially unless a script is given.
    Play {
        #[arg(long, default_value_t = 8)]
        n_cap: usize,
        /// Robber components, e.g. "a,b;c".
        #[arg(long)]
        script: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Undirected graphs where vertex packing falls below vertex covering.
    VertexQuestion {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Random graphs instead of all of them.
        #[arg(long, conflicts_with = "exhaustive")]
        trials: Option<usize>,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Bidirected graph with a 0/1 null vector that is not a cycle union.
    Nullspace {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        /// Also write the graph found here.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Null vectors of every split graph in a small family.
    SplitSurvey {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        multiplicity: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => EXIT_PARSE,
            AppError::Format(FormatError::Graph(e)) | AppError::Core(e) => core_exit(e),
            AppError::Format(_) => EXIT_PARSE,
            AppError::Write { .. } => EXIT_INTERNAL,
        }
    }
}

fn core_exit(e: &Error) -> i32 {
    match e {
        Error::InvalidGraph(_) | Error::InvalidArgument(_) | Error::IllegalMove(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Integrality(_) | Error::Certificate(_) | Error::LpStatus(_) | Error::Strategy(_) | Error::NotFound => {
            EXIT_INTERNAL
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32, AppError> {
    let g = &cli.global;
    let text = match &cli.command {
        Command::Generate { n, m } => {
            let kind = parse_kind(g.kind.as_deref().unwrap_or("directed"))?;
            generate(kind, *n, *m, g.seed)?
        }
        Command::Duality => report::to_text(&cmd_duality(g, &load(g)?)?),
        Command::Widths { which } => report::to_text(&cmd_widths(g, &load(g)?, which)?),
        Command::Search { which } => report::to_text(&cmd_search(g, which)?),
    };
    emit(g, &text)?;
    Ok(EXIT_OK)
}

fn emit(g: &GlobalArgs, text: &str) -> Result<(), AppError> {
    match &g.out {
        Some(path) => write_file(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| AppError::Write {
                    path: String::from("<stdout>"),
                    source,
                })
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), AppError> {
    fs::write(path, text).map_err(|source| AppError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn load(g: &GlobalArgs) -> Result<AnyGraph, AppError> {
    let path = g
        .input
        .as_ref()
        .ok_or_else(|| AppError::Usage(String::from("--input is required")))?;
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let graph = parse_graph(&text)?;
    if let Some(k) = &g.kind {
        let want = parse_kind(k)?;
        if want != graph.kind() {
            return Err(AppError::Usage(format!(
                "--kind {} but the file holds a {} graph",
                want.as_str(),
                graph.kind().as_str()
            )));
        }
    }
    Ok(graph)
}

fn options(g: &GlobalArgs) -> EngineOptions {
    EngineOptions {
        budget: budget(g),
        verify: g.verify.into(),
    }
}

fn budget(g: &GlobalArgs) -> EnumerationBudget {
    EnumerationBudget {
        max_cycles: g.budget_cycles,
        max_subsets: g.budget_subsets,
    }
}

/// Resolves `--target` against `graph`.
pub fn parse_target(spec: &str, graph: &dyn CycleGraph, seed: u64) -> Result<Target, AppError> {
    let (kind, list) = match spec.split_once('=') {
        None if spec == "all" => ("vertices", "all"),
        None => return Err(AppError::Usage(format!("bad --target {spec:?}"))),
        Some(pair) => pair,
    };
    type Lookup<'a> = &'a dyn Fn(&str) -> Option<usize>;
    let (count, lookup): (usize, Lookup) = match kind {
        "vertices" => (graph.vertex_count(), &|s| graph.vertex_index(s)),
        "edges" => (graph.edge_count(), &|s| graph.edge_index(s)),
        _ => return Err(AppError::Usage(format!("bad --target kind {kind:?}"))),
    };
    let set: BitSet = match list {
        "all" => (0..count).collect(),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).filter(|_| rng.gen_bool(0.5)).collect()
        }
        "" => BitSet::new(),
        names => names
            .split(',')
            .map(|s| lookup(s.trim()).ok_or_else(|| AppError::Usage(format!("unknown {kind} name {s:?}"))))
            .collect::<Result<_, _>>()?,
    };
    Ok(if kind == "vertices" {
        Target::Vertices(set)
    } else {
        Target::Edges(set)
    })
}

fn header(command: &str, g: &GlobalArgs) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("budget".into(), report::budget(&budget(g)));
    m.insert("verify".into(), json!(Verification::from(g.verify).as_str()));
    m.insert("seed".into(), json!(g.seed));
    m
}

pub fn cmd_duality(g: &GlobalArgs, graph: &AnyGraph) -> Result<Value, AppError> {
    let opts = options(g);
    let target = parse_target(&g.target, graph.as_dyn(), g.seed)?;
    let (r, log_only) = match (graph, &target) {
        (AnyGraph::Directed(d), Target::Vertices(s)) => (duality::directed_vertex_duality(d, s, &opts)?, false),
        (AnyGraph::Directed(d), Target::Edges(f)) => (duality::directed_edge_duality(d, f, &opts)?, false),
        (AnyGraph::Bidirected(b), Target::Vertices(s)) => (duality::bidirected_vertex_duality(b, s, &opts)?, false),
        (AnyGraph::Undirected(u), Target::Edges(f)) => (duality::undirected_edge_duality(u, f, &opts)?, false),
        (AnyGraph::Bidirected(b), t @ Target::Edges(_)) => (duality::oracle_comparison(b, t.clone(), &opts)?, true),
        (AnyGraph::Undirected(u), t @ Target::Vertices(_)) => (duality::oracle_comparison(u, t.clone(), &opts)?, true),
    };
    let mut m = header("duality", g);
    m.insert("log_only".into(), json!(log_only));
    m.insert("report".into(), report::duality(graph.as_dyn(), &r));
    Ok(Value::Object(m))
}

pub fn cmd_widths(g: &GlobalArgs, graph: &AnyGraph, which: &WidthsCommand) -> Result<Value, AppError> {
    let opts = options(g);
    let body = match graph {
        AnyGraph::Directed(d) => widths_on(d, &opts, which)?,
        AnyGraph::Bidirected(b) => {
            let mut v = widths_on(b, &opts, which)?;
            // Bidirected strong components are a stand-in; say so.
            v["strong_components"] = json!("cycle-chain stand-in");
            v
        }
        AnyGraph::Undirected(_) => {
            return Err(AppError::Usage(String::from("widths need a directed or bidirected graph")))
        }
    };
    let name = match which {
        WidthsCommand::Porosity { .. } => "widths porosity",
        WidthsCommand::Cyclewidth { .. } => "widths cyclewidth",
        WidthsCommand::Strategy { .. } => "widths strategy",
        WidthsCommand::Play { .. } => "widths play",
    };
    let mut m = header(name, g);
    m.insert("report".into(), body);
    Ok(Value::Object(m))
}

fn names_to_set(graph: &dyn CycleGraph, list: &str) -> Result<BitSet, AppError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| graph.vertex_index(s).ok_or_else(|| AppError::Usage(format!("unknown vertex {s:?}"))))
        .collect()
}

fn widths_on<G: WidthGraph>(graph: &G, opts: &EngineOptions, which: &WidthsCommand) -> Result<Value, AppError> {
    let mut ctx = WidthContext::new(graph, opts)?;
    let dynamic: &dyn CycleGraph = graph;
    Ok(match which {
        WidthsCommand::Porosity { side } => {
            let cut = EdgeCut::from_side(graph, names_to_set(dynamic, side)?);
            let p = ctx.porosity(&cut)?;
            report::porosity(dynamic, &cut, &p)
        }
        WidthsCommand::Cyclewidth { n_cap } => {
            let (w, dec) = ctx.cycle_width(*n_cap)?;
            json!({"cycle_width": w, "decomposition": report::decomposition(dynamic, &dec)})
        }
        WidthsCommand::Strategy { n_cap } => {
            let (w, dec) = ctx.cycle_width(*n_cap)?;
            let ys = ctx.hitting_sets_ye(&dec)?;
            let strategy = CopStrategy::new(dec, ys.iter().map(|y| y.set.clone()).collect(), w)?;
            json!({"strategy": report::strategy(dynamic, &strategy), "y_sets": report::y_sets(dynamic, &ys)})
        }
        WidthsCommand::Play { n_cap, script } => {
            let (w, dec) = ctx.cycle_width(*n_cap)?;
            let ys = ctx.hitting_sets_ye(&dec)?;
            let strategy = CopStrategy::new(dec, ys.into_iter().map(|y| y.set).collect(), w)?;
            let robber = match script {
                None => Robber::Adversarial,
                Some(s) => Robber::Scripted(
                    s.split(';')
                        .map(|part| names_to_set(dynamic, part))
                        .collect::<Result<_, _>>()?,
                ),
            };
            let cycles = ctx.cycles().ok_or(Error::BudgetExceeded {
                what: "cycle",
                limit: opts.budget.max_cycles,
            })?;
            let outcome = play_cops_and_robbers(graph, &strategy, cycles, &robber)?;
            json!({
                "cycle_width": w,
                "robber": if script.is_some() { "scripted" } else { "adversarial" },
                "strategy": report::strategy(dynamic, &strategy),
                "game": report::game(dynamic, &outcome),
            })
        }
    })
}

/// Searches never fail on budget or on finding nothing; both are findings.
pub fn cmd_search(g: &GlobalArgs, which: &SearchCommand) -> Result<Value, AppError> {
    let b = budget(g);
    let body = match which {
        SearchCommand::VertexQuestion {
            n_max,
            trials,
            exhaustive: _,
        } => {
            let mode = match trials {
                Some(t) => SearchMode::Sampled {
                    seed: g.seed,
                    trials: *t,
                },
                None => SearchMode::Exhaustive,
            };
            report::vertex_question(&oracles::search_vertex_question_counterexample(*n_max, mode, &b)?)
        }
        SearchCommand::Nullspace {
            n_max,
            trials,
            fixture,
        } => match oracles::search_nullspace_noncycle_fixture(*n_max, g.seed, *trials, &b) {
            Ok(f) => {
                if let Some(path) = fixture {
                    write_file(path, &report::fixture_file(&f))?;
                }
                report::nullspace(&f)
            }
            Err(e) => not_found("nullspace", e)?,
        },
        SearchCommand::SplitSurvey { n_max, multiplicity } => {
            match oracles::survey_split_nullspace(*n_max, *multiplicity) {
                Ok(s) => report::split_survey(*n_max, *multiplicity, &s),
                Err(e) => not_found("split-survey", e)?,
            }
        }
    };
    let mut m = header("search", g);
    m.insert("findings".into(), body);
    Ok(Value::Object(m))
}

fn not_found(search: &str, e: Error) -> Result<Value, AppError> {
    match e {
        Error::NotFound => Ok(json!({"search": search, "status": "none found"})),
        Error::BudgetExceeded { what, limit } => Ok(json!({
            "search": search,
            "status": "budget exceeded",
            "budget": {"what": what, "limit": limit},
        })),
        other => Err(other.into()),
    }
}

