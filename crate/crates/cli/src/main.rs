mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Parser, Subcommand, ValueEnum};
use regex::Regex;
use serde_json::{json, Value};

use circuitwalk::builders::{build_circuit_walk, build_edge_walk};
use circuitwalk::constructions::{example_graph, family_gk, glue, random_bipartite, GlueSpec};
use circuitwalk::verify::verify_example;
use circuitwalk::{
    parse_graph, serialize_graph, validate_walk, Error, Feasibility, Limits, NodeId, Point, Polyhedron, Scalar, SpanningTree,
    WalkMode, DEFAULT_STATE_CAP, DEFAULT_TREE_CAP,
};

use report::{instance_of, point, render, walk_json, walk_text, Failure, Outcome};

#[derive(Parser)]
#[command(name = "circuitwalk", version, about = "Edge and circuit walks on dual network flow polyhedra")]
struct Cli {
    /// Write the instance (gen, glue) or the report (other commands) to FILE.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the pairwise searches.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Circuit,
}

impl From<Mode> for WalkMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Edge => WalkMode::Edge,
            Mode::Circuit => WalkMode::Circuit,
        }
    }
}

#[derive(clap::Args)]
struct Caps {
    /// Circuit search depth cap (default |V|(|V|-1)/2).
    #[arg(long = "cap", value_name = "D")]
    depth: Option<usize>,
    /// Circuit search state cap.
    #[arg(long = "states", value_name = "L", default_value_t = DEFAULT_STATE_CAP)]
    states: usize,
    /// Spanning tree enumeration cap.
    #[arg(long = "trees", value_name = "T", default_value_t = DEFAULT_TREE_CAP)]
    trees: usize,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits { tree_cap: self.trees, state_cap: self.states, depth_cap: self.depth }
    }
}

#[derive(clap::Args)]
struct Endpoints {
    /// Source vertex as tree edges, e.g. `v3v0,v2v0,v3v1`.
    #[arg(long, value_name = "EDGES", conflicts_with = "source_point")]
    source_tree: Option<String>,
    /// Source vertex as coordinates, e.g. `0,2/3,4/3,2`.
    #[arg(long, value_name = "COORDS")]
    source_point: Option<String>,
    #[arg(long, value_name = "EDGES", conflicts_with = "target_point")]
    target_tree: Option<String>,
    #[arg(long, value_name = "COORDS")]
    target_point: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Glue instances together at one node each.
    Glue {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Attach node per file (default: node 0 of every part).
        #[arg(long, value_delimiter = ',')]
        attach: Vec<usize>,
    },
    /// List all vertices with their spanning trees.
    Vertices {
        file: PathBuf,
        #[arg(long = "trees", value_name = "T", default_value_t = DEFAULT_TREE_CAP)]
        trees: usize,
    },
    /// Exact edge or circuit distance between two vertices.
    Distance {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        ends: Endpoints,
        #[command(flatten)]
        caps: Caps,
    },
    /// Exact edge or circuit diameter.
    Diameter {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build a walk with the constructive algorithm.
    Walk {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        ends: Endpoints,
    },
    /// Run the frozen checks on the four-node example.
    VerifyExample,
}

#[derive(Subcommand)]
enum GenKind {
    /// The four-node example.
    Example,
    /// k copies of the example glued at node 0.
    Gk {
        #[arg(long)]
        k: usize,
    },
    /// Complete bipartite instance with random costs.
    Bipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Glue { .. } => "glue",
            Command::Vertices { .. } => "vertices",
            Command::Distance { .. } => "distance",
            Command::Diameter { .. } => "diameter",
            Command::Walk { .. } => "walk",
            Command::VerifyExample => "verify-example",
        }
    }
}

fn load(path: &Path) -> Result<Polyhedron, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let poly: Polyhedron = parse_graph(&text)?;
    if let Feasibility::Infeasible { negative_cycle } = poly.feasibility_status() {
        return Err(Error::InfeasibleInstance { cycle: negative_cycle }.into());
    }
    Ok(poly)
}

fn tree_token() -> &'static Regex {
    static TOKEN: OnceLock<Regex> = OnceLock::new();
    TOKEN.get_or_init(|| Regex::new(r"^v(\d+)v(\d+)$").expect("valid regex"))
}

fn parse_tree(poly: &Polyhedron, text: &str) -> Result<SpanningTree, Failure> {
    let mut indices = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let caps = tree_token().captures(token).ok_or_else(|| Failure::Usage(format!("bad tree edge `{token}`")))?;
        let (t, h): (usize, usize) = (caps[1].parse().unwrap_or(usize::MAX), caps[2].parse().unwrap_or(usize::MAX));
        let edge = poly
            .graph()
            .find_edge(t, h)
            .ok_or_else(|| Error::NotASpanningTree(format!("no edge {token} in the instance")))?;
        indices.push(edge);
    }
    Ok(SpanningTree::new(poly.graph(), indices)?)
}

fn parse_point(poly: &Polyhedron, text: &str) -> Result<Point, Failure> {
    let coords = text
        .split(',')
        .map(|c| circuitwalk::Rational::parse_exact(c.trim()).map_err(|_| Failure::Usage(format!("bad coordinate `{c}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != poly.node_count() {
        return Err(Error::DimensionMismatch { expected: poly.node_count(), found: coords.len() }.into());
    }
    let p = Point::new(coords)?;
    if !poly.is_vertex(&p)? {
        return Err(Error::NotAVertex.into());
    }
    Ok(p)
}

fn resolve(poly: &Polyhedron, tree: &Option<String>, coords: &Option<String>, which: &str) -> Result<Point, Failure> {
    match (tree, coords) {
        (Some(t), None) => Ok(poly.vertex_from_tree(&parse_tree(poly, t)?)?),
        (None, Some(c)) => parse_point(poly, c),
        _ => Err(Failure::Usage(format!("give exactly one of --{which}-tree and --{which}-point"))),
    }
}

fn instance_outcome(poly: &Polyhedron, output: Option<&Path>) -> Result<Outcome, Failure> {
    let text = serialize_graph(poly);
    let instance = instance_of(poly);
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                instance,
                result: json!({ "written": path.display().to_string() }),
                text: format!("wrote {} nodes, {} edges to {}\n", poly.node_count(), poly.edge_count(), path.display()),
                checks_failed: false,
            })
        }
        None => Ok(Outcome { instance, result: json!({ "graph": text }), text, checks_failed: false }),
    }
}

fn simple(poly: &Polyhedron, result: Value, text: String) -> Outcome {
    Outcome { instance: instance_of(poly), result, text, checks_failed: false }
}

fn run(command: &Command, output: Option<&Path>) -> Result<Outcome, Failure> {
    match command {
        Command::Gen { kind } => {
            let poly = match kind {
                GenKind::Example => example_graph(),
                GenKind::Gk { k } => family_gk(*k)?,
                GenKind::Bipartite { m, n, seed } => random_bipartite(*m, *n, *seed)?,
            };
            instance_outcome(&poly, output)
        }
        Command::Glue { files, attach } => {
            if !attach.is_empty() && attach.len() != files.len() {
                return Err(Failure::Usage("--attach needs one node per file".into()));
            }
            let parts = files
                .iter()
                .enumerate()
                .map(|(i, f)| Ok((load(f)?, NodeId(attach.get(i).copied().unwrap_or(0)))))
                .collect::<Result<Vec<_>, Failure>>()?;
            let glued = glue(&GlueSpec { parts })?;
            instance_outcome(&glued.poly, output)
        }
        Command::Vertices { file, trees } => {
            let poly = load(file)?;
            let set = poly.enumerate_vertices(*trees)?;
            let edge_name = |i: &usize| poly.graph().edge(*i).to_string();
            let mut text = format!("{} vertices\n", set.len());
            let mut list = Vec::new();
            for (v, witnesses) in set.vertices.iter().zip(&set.tree_witnesses) {
                let named: Vec<Vec<String>> =
                    witnesses.iter().map(|t| t.edge_indices().iter().map(edge_name).collect()).collect();
                text.push_str(&format!("{v}  tree {}\n", named[0].join(",")));
                list.push(json!({ "point": point(v), "trees": named }));
            }
            let degenerate = set.tree_witnesses.iter().any(|w| w.len() > 1);
            let result = json!({ "count": set.len(), "degenerate": degenerate, "vertices": list });
            Ok(simple(&poly, result, text))
        }
        Command::Distance { file, mode, ends, caps } => {
            let poly = load(file)?;
            let source = resolve(&poly, &ends.source_tree, &ends.source_point, "source")?;
            let target = resolve(&poly, &ends.target_tree, &ends.target_point, "target")?;
            let limits = caps.limits();
            let found = match WalkMode::from(*mode) {
                WalkMode::Edge => poly.combinatorial_distance(&source, &target, &limits)?,
                WalkMode::Circuit => poly.circuit_distance(&source, &target, &limits)?,
            };
            let text = format!("{} distance {}\n{}", WalkMode::from(*mode), found.length, walk_text(&found.walk));
            let result = json!({
                "mode": WalkMode::from(*mode).to_string(),
                "source": point(&source),
                "target": point(&target),
                "distance": found.length,
                "walk": walk_json(&found.walk),
            });
            Ok(simple(&poly, result, text))
        }
        Command::Diameter { file, mode, caps } => {
            let poly = load(file)?;
            let d = poly.diameter((*mode).into(), &caps.limits())?;
            let mut text = format!("{} diameter {}\n", WalkMode::from(*mode), d.value);
            let witness = match &d.witness {
                Some((a, b)) => {
                    text.push_str(&format!("attained from {a} to {b}\n"));
                    json!([point(a), point(b)])
                }
                None => Value::Null,
            };
            let result = json!({ "mode": WalkMode::from(*mode).to_string(), "diameter": d.value, "witness": witness });
            Ok(simple(&poly, result, text))
        }
        Command::Walk { file, mode, ends } => {
            let poly = load(file)?;
            let source = resolve(&poly, &ends.source_tree, &ends.source_point, "source")?;
            let target = resolve(&poly, &ends.target_tree, &ends.target_point, "target")?;
            let (n, m) = (poly.node_count(), poly.edge_count());
            let (walk, bound) = match WalkMode::from(*mode) {
                WalkMode::Edge => (build_edge_walk(&poly, &source, &target)?.0, ((n - 1) * m).min((n * n * n - n) / 6)),
                WalkMode::Circuit => (build_circuit_walk(&poly, &source, &target)?.0, n * (n - 1) / 2),
            };
            if let Some(v) = validate_walk(&poly, &walk) {
                return Err(Error::Internal(format!("built walk fails validation: {v}")).into());
            }
            let mut result = walk_json(&walk);
            result["bound"] = json!(bound);
            let text = format!("{}bound {bound}\n", walk_text(&walk));
            Ok(simple(&poly, result, text))
        }
        Command::VerifyExample => {
            let report = verify_example();
            let mut text = String::new();
            let mut checks = Vec::new();
            for c in &report.checks {
                text.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
                checks.push(json!({ "name": c.name, "passed": c.passed, "detail": c.detail }));
            }
            let passed = report.all_passed();
            Ok(Outcome {
                instance: instance_of(&example_graph()),
                result: json!({ "passed": passed, "checks": checks }),
                text,
                checks_failed: !passed,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let writes_instance = matches!(cli.command, Command::Gen { .. } | Command::Glue { .. });
    let instance_path = if writes_instance { cli.output.as_deref() } else { None };
    let outcome = run(&cli.command, instance_path);
    let (shown, failure) = match outcome {
        Ok(o) if o.checks_failed => (Some(o), Some(Failure::Checks)),
        Ok(o) => (Some(o), None),
        Err(f) => (None, Some(f)),
    };
    let text = render(cli.command.name(), shown.as_ref(), failure.as_ref(), cli.json);
    match (&cli.output, writes_instance) {
        (Some(path), false) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{text}"),
    }
    ExitCode::from(failure.map_or(0, |f| f.exit_code()) as u8)
}
