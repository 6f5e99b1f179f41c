//! The `rigidlab` command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::admissibility::{
    classify_admissible, conic_check, construct_admissible_family, example_one_space, example_two_space,
    six_edge_graphs, skew_symmetric_matrices, test_admissible,
};
use crate::error::Error;
use crate::io::{config_to_json, graph_to_json, matrix_to_json, parse_config, parse_graph, parse_scalar, parse_subspace, scalar_to_json};
use crate::linalg::{set_default_tolerance, Rational, Scalar};
use crate::motions::{MotionSpace, PointConfiguration};
use crate::rigidity::{analyze, henneberg_extend, is_generically_rigid, Edge, Framework, ImpliedEdges};
use crate::sampling::SeedTree;
use crate::verify::{run_battery, BatteryOptions};

const EXIT_CODES: &str = "\
Exit codes:
  0  success, or the property asked about holds
  1  the property does not hold (not rigid, not admissible, a suite failed)
  2  usage error: bad arguments, unreadable file, invalid support or index
  3  parse error in an input file
  4  degenerate input: singular point blocks, violated hypotheses, non-isostatic graph";

#[derive(Parser, Debug)]
#[command(name = "rigidlab", version, about = "Infinitesimal rigidity and admissible motion spaces", after_help = EXIT_CODES)]
pub struct Cli {
    /// Seed for every random configuration and sample point.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random pin positions per admissibility test; also scales `verify`.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
    /// Relative rank tolerance for the float backend.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Float,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rigidity matrix rank, flexes and trivial motions of a framework.
    Analyze(AnalyzeArgs),
    /// Henneberg extension of a graph and generic rigidity of the result.
    Henneberg(HennebergArgs),
    /// Admissibility test and classification of a motion subspace of five points.
    Admissible(AdmissibleArgs),
    /// Implied edges and implied K4 subgraphs.
    Implied(ImpliedArgs),
    /// Quadrics at infinity through the given edge directions.
    Conic(ConicArgs),
    /// Run the full property battery.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Graph file.
    graph: PathBuf,
    /// Configuration file; a seeded random integer configuration if absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Dimension of the random configuration.
    #[arg(long, default_value_t = 3)]
    dim: usize,
}

#[derive(Args, Debug)]
struct HennebergArgs {
    graph: PathBuf,
    /// Support vertices, 1-based, e.g. `1,2,3,4`.
    #[arg(long)]
    x: String,
    /// Deleted edges, e.g. `1-2,3-4`.
    #[arg(long, default_value = "")]
    f: String,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Write the extended graph here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AdmissibleArgs {
    /// Five points in space; a seeded random configuration if absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Subspace file.
    #[arg(long, conflicts_with = "builtin")]
    subspace: Option<PathBuf>,
    /// `example1`, `example2:K` or `constructed:SEED`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct ImpliedArgs {
    graph: PathBuf,
    /// Pair to test, 1-based `i,j`; repeatable. All implied non-edges are listed if absent.
    #[arg(long = "pair")]
    pairs: Vec<String>,
    /// Vertex set to search for an implied K4.
    #[arg(long)]
    k4: Option<String>,
    #[arg(long, default_value_t = 3)]
    dim: usize,
}

#[derive(Args, Debug)]
struct ConicArgs {
    /// Five points in space; a seeded random configuration if absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Edges `1-2,...`; the three standard six-edge graphs if absent.
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Corrupt one comparison to check that failures are reported.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Lib(e) => match e {
            Error::Parse(_) => 3,
            Error::DegenerateConfig(_)
            | Error::HypothesisViolated(_)
            | Error::Singular
            | Error::AffineSpanDegenerate
            | Error::OnAffineSpan
            | Error::ParallelToAffineSpan
            | Error::NotIsostatic
            | Error::TrivialMotion => 4,
            _ => 2,
        },
    }
}

/// Output records in insertion order.
struct Out {
    format: Format,
    text: String,
}

impl Out {
    fn record(&mut self, kind: &str, fields: Vec<(&str, Value)>) {
        match self.format {
            Format::Text => {
                for (k, v) in &fields {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    let _ = writeln!(self.text, "{k}: {shown}");
                }
            }
            Format::Jsonl => {
                let mut obj = serde_json::Map::new();
                obj.insert("record".into(), json!(kind));
                for (k, v) in fields {
                    obj.insert(k.into(), v);
                }
                let _ = writeln!(self.text, "{}", Value::Object(obj));
            }
        }
    }

    fn line(&mut self, text: String) {
        if self.format == Format::Text {
            let _ = writeln!(self.text, "{text}");
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_indices(s: &str, what: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(CliError::Usage(format!("{what}: {t:?} is not a 1-based vertex"))),
        })
        .collect()
}

fn parse_edges(s: &str) -> CliResult<Vec<Edge>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let ends = t.split('-').collect::<Vec<_>>();
            match ends.as_slice() {
                [a, b] => {
                    let v = parse_indices(&format!("{a},{b}"), "edge")?;
                    Ok((v[0], v[1]))
                }
                _ => Err(CliError::Usage(format!("edge {t:?} is not of the form i-j"))),
            }
        })
        .collect()
}

fn one_based(v: &[usize]) -> Value {
    json!(v.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn load_config<S: Scalar>(path: Option<&PathBuf>, dim: usize, count: usize, tree: &SeedTree) -> CliResult<PointConfiguration<S>> {
    match path {
        Some(path) => Ok(parse_config(&read(path)?)?),
        None => Ok(PointConfiguration::random_generic(dim, count, &mut tree.rng("cli-config", 0))),
    }
}

fn cmd_analyze<S: Scalar>(cli: &Cli, args: &AnalyzeArgs, out: &mut Out) -> CliResult<bool> {
    let tree = SeedTree::new(cli.seed);
    let g = parse_graph(&read(&args.graph)?)?;
    let p: PointConfiguration<S> = load_config(args.config.as_ref(), args.dim, g.vertex_count(), &tree)?;
    let f = Framework::new(g, p)?;
    let rep = analyze(&f);
    out.record(
        "analyze",
        vec![
            ("backend", json!(S::NAME)),
            ("vertices", json!(f.graph().vertex_count())),
            ("edges", json!(rep.edge_count)),
            ("rank", json!(rep.rank)),
            ("flex_dim", json!(rep.flex_dim)),
            ("trivial_dim", json!(rep.trivial_dim)),
            ("rigid", json!(rep.is_rigid)),
            ("isostatic", json!(rep.is_isostatic)),
        ],
    );
    Ok(rep.is_rigid)
}

fn cmd_henneberg(cli: &Cli, args: &HennebergArgs, out: &mut Out) -> CliResult<bool> {
    let g = parse_graph(&read(&args.graph)?)?;
    let x = parse_indices(&args.x, "--x")?;
    let f = parse_edges(&args.f)?;
    let extended = henneberg_extend(&g, &x, &f, args.dim)?;
    let rigid = is_generically_rigid(&extended, args.dim, &mut SeedTree::new(cli.seed).rng("cli-henneberg", 0));
    let mut fields = vec![
        ("vertices", json!(extended.vertex_count())),
        ("edges", json!(extended.edge_count())),
        ("rigid", json!(rigid)),
    ];
    match &args.out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&graph_to_json(&extended)).expect("json");
            std::fs::write(path, text + "\n")
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            fields.push(("written", json!(path.display().to_string())));
        }
        None => fields.push(("graph", graph_to_json(&extended))),
    }
    out.record("henneberg", fields);
    Ok(rigid)
}

fn builtin_space<S: Scalar>(name: &str, p: &PointConfiguration<S>) -> CliResult<MotionSpace<S>> {
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    match (kind, arg) {
        ("example1", None) => Ok(example_one_space(p)),
        ("example2", Some(k)) => {
            let k = parse_scalar::<S>(&json!(k), "example2")
                .map_err(|_| CliError::Usage(format!("example2 constant {k:?} is not a number")))?;
            Ok(example_two_space(p, &k)?)
        }
        ("constructed", Some(seed)) => {
            let seed: u64 = seed.parse().map_err(|_| CliError::Usage(format!("bad seed {seed:?}")))?;
            let fam = construct_admissible_family(p, 1, &mut SeedTree::new(seed).rng("cli-constructed", 0))?;
            Ok(fam.spaces.into_iter().next().expect("one space requested"))
        }
        _ => Err(CliError::Usage(format!("unknown builtin {name:?}; use example1, example2:K or constructed:SEED"))),
    }
}

fn cmd_admissible<S: Scalar>(cli: &Cli, args: &AdmissibleArgs, out: &mut Out) -> CliResult<bool> {
    let tree = SeedTree::new(cli.seed);
    let p: PointConfiguration<S> = load_config(args.config.as_ref(), 3, 5, &tree)?;
    let s = match (&args.subspace, &args.builtin) {
        (Some(path), None) => parse_subspace(&read(path)?, &p)?,
        (None, Some(name)) => builtin_space(name, &p)?,
        _ => return Err(CliError::Usage("give exactly one of --subspace or --builtin".into())),
    };
    let rep = test_admissible(&p, &s, cli.samples, &mut tree.rng("cli-admissible", 0))?;
    out.record(
        "admissibility",
        vec![
            ("backend", json!(S::NAME)),
            ("config", config_to_json(&p)),
            ("candidate_dim", json!(rep.candidate_dim)),
            ("intersects_trivial", json!(rep.intersects_trivial)),
            ("samples_tested", json!(rep.samples_tested)),
            ("samples_skipped", json!(rep.samples_skipped)),
            ("h_ranks", json!(rep.h_ranks)),
            ("max_h_rank", json!(rep.max_h_rank)),
            ("admissible", json!(rep.admissible)),
            ("witness_failures", json!(rep.witness_failures.len())),
        ],
    );
    if rep.admissible && (p.dim(), p.count()) == (3, 5) {
        match classify_admissible(&p, &s) {
            Ok(c) => {
                let plane = c.plane.as_ref().map(|e| {
                    Value::Array(e.basis().iter().map(|b| Value::Array(b.iter().map(scalar_to_json).collect())).collect())
                });
                let z = c.z.as_ref().map(|z| Value::Array(z.iter().map(scalar_to_json).collect()));
                out.record(
                    "classification",
                    vec![
                        ("classification", json!(c.kind.name())),
                        ("plane", plane.unwrap_or(Value::Null)),
                        ("z", z.unwrap_or(Value::Null)),
                        ("details", json!(c.details)),
                    ],
                );
            }
            Err(e) => out.record("classification", vec![("classification_error", json!(e.to_string()))]),
        }
    }
    Ok(rep.admissible)
}

fn cmd_implied(cli: &Cli, args: &ImpliedArgs, out: &mut Out) -> CliResult<bool> {
    let g = parse_graph(&read(&args.graph)?)?;
    let oracle = ImpliedEdges::new(&g, args.dim, &mut SeedTree::new(cli.seed).rng("cli-implied", 0));
    let mut all_true = true;
    if args.pairs.is_empty() && args.k4.is_none() {
        let implied: Vec<Value> = (0..g.vertex_count())
            .tuple_combinations()
            .filter(|&(i, j)| !g.has_edge(i, j))
            .filter_map(|(i, j)| match oracle.is_implied(i, j) {
                Ok(true) => Some(Ok(json!([i + 1, j + 1]))),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        out.record("implied", vec![("implied_non_edges", Value::Array(implied))]);
    }
    for pair in &args.pairs {
        let v = parse_indices(pair, "--pair")?;
        if v.len() != 2 {
            return Err(CliError::Usage(format!("--pair {pair:?} needs two vertices")));
        }
        let implied = oracle.is_implied(v[0], v[1])?;
        all_true &= implied;
        out.record("implied", vec![("pair", one_based(&v)), ("implied", json!(implied))]);
    }
    if let Some(set) = &args.k4 {
        let x = parse_indices(set, "--k4")?;
        let found = if x.len() < 4 { None } else { oracle.find_k4(&x)? };
        all_true &= found.is_some();
        out.record("implied_k4", vec![("k4", found.map_or(Value::Null, |k| one_based(&k)))]);
    }
    Ok(all_true)
}

fn cmd_conic<S: Scalar>(cli: &Cli, args: &ConicArgs, out: &mut Out) -> CliResult<bool> {
    let p: PointConfiguration<S> = load_config(args.config.as_ref(), 3, 5, &SeedTree::new(cli.seed))?;
    let graphs: Vec<(String, Vec<Edge>)> = match &args.edges {
        Some(e) => vec![("given".into(), parse_edges(e)?)],
        None => six_edge_graphs().into_iter().enumerate().map(|(i, g)| (format!("H{}", i + 1), g)).collect(),
    };
    let skew = skew_symmetric_matrices::<S>(p.dim());
    let mut all_skew = true;
    for (name, edges) in graphs {
        let space = conic_check(&p, &edges)?;
        let only_skew = space.same_as(&skew);
        all_skew &= only_skew;
        let basis: Vec<Value> = space
            .basis()
            .iter()
            .map(|b| matrix_to_json(&crate::linalg::Matrix::from_vec(p.dim(), p.dim(), b.clone())))
            .collect();
        out.record(
            "conic",
            vec![
                ("graph", json!(name)),
                ("edges", Value::Array(edges.iter().map(|&(i, j)| json!([i + 1, j + 1])).collect())),
                ("dim", json!(space.dim())),
                ("skew_only", json!(only_skew)),
                ("basis", Value::Array(basis)),
            ],
        );
    }
    Ok(all_skew)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, out: &mut Out) -> CliResult<bool> {
    let results = run_battery(BatteryOptions { seed: cli.seed, samples: cli.samples, inject_fault: args.inject_fault });
    let mut all = true;
    for r in &results {
        all &= r.passed;
        match out.format {
            Format::Text => out.line(format!(
                "[{}] {:>2} {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.index,
                r.tag,
                r.detail
            )),
            Format::Jsonl => out.record(
                "suite",
                vec![
                    ("index", json!(r.index)),
                    ("tag", json!(r.tag)),
                    ("passed", json!(r.passed)),
                    ("detail", json!(r.detail)),
                ],
            ),
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.record("summary", vec![("passed", json!(passed)), ("total", json!(results.len())), ("ok", json!(all))]);
    Ok(all)
}

fn dispatch<S: Scalar>(cli: &Cli, out: &mut Out) -> CliResult<bool> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze::<S>(cli, a, out),
        Command::Henneberg(a) => cmd_henneberg(cli, a, out),
        Command::Admissible(a) => cmd_admissible::<S>(cli, a, out),
        Command::Implied(a) => cmd_implied(cli, a, out),
        Command::Conic(a) => cmd_conic::<S>(cli, a, out),
        Command::Verify(a) => cmd_verify(cli, a, out),
    }
}

/// Runs the command line on `args` (program name first) and returns the
/// process exit code. Standard output is written only on success paths.
pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            eprintln!("error: --tol must be a positive number");
            return 2;
        }
        set_default_tolerance(tol);
    }
    let mut out = Out { format: cli.format, text: String::new() };
    let result = match cli.backend {
        Backend::Exact => dispatch::<Rational>(&cli, &mut out),
        Backend::Float => dispatch::<f64>(&cli, &mut out),
    };
    print!("{}", out.text);
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) => m.clone(),
                CliError::Lib(err) => err.to_string(),
            };
            eprintln!("error: {msg}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os())
}
