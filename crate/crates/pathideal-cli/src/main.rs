//! `pathideal`: n-path ideals of trees from the command line.
//!
//! Subcommands: `classify`, `gens`, `trim`, `order`, `reg`, `fuzz`.
//! Exit codes: 0 = linear quotients / zero ideal / success, 1 = not linear
//! quotients, 2 = input error, 3 = fuzz disagreement.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use pathideal::classify::{classify, classify_legacy_n23, Verdict, Witness};
use pathideal::fuzz::{self, FuzzConfig};
use pathideal::graph::{make_family, FamilyGraph, GraphFamilySpec, SimpleGraph, Tree};
use pathideal::ideal::path_ideal;
use pathideal::linquot::DEFAULT_LQ_CAP;
use pathideal::resolution::{betti_table_capped, DEFAULT_GENERATOR_CAP};
use pathideal::OracleCaps;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pathideal",
    version,
    about = "n-path ideals of trees: generators, trimming, regularity, and the linear-quotients classifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file: one `u v` line per edge, `#` comments allowed.
    file: Option<PathBuf>,
    /// Family spec instead of a file, e.g. path:9, star:5, Lnk:5,3,
    /// two_paths:4, caterpillar:5,1,0,2,1.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide linear quotients for J_n and print the witness.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Path size parameter (vertices per path), n >= 4.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        /// Experimental: allow n in {2,3} via the induced-matching criterion.
        #[arg(long = "legacy-n23")]
        legacy_n23: bool,
    },
    /// Print the minimal generators of J_n.
    Gens {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the trimmed tree (closed neighborhoods of a longest path).
    Trim {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print a verified linear-quotients order for J_n, if one exists.
    Order {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compute the exact Betti table and regularity of J_n.
    Reg {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        /// Generator cap for the homology engine.
        #[arg(long = "hom-cap", default_value_t = DEFAULT_GENERATOR_CAP)]
        hom_cap: usize,
    },
    /// Cross-validate the classifier on seeded random trees.
    Fuzz {
        /// Vertex counts, inclusive: `A..B` or a single number.
        #[arg(long, default_value = "6..9")]
        vertices: RangeArg,
        /// Values of n, inclusive: `A..B` or a single number.
        #[arg(long, default_value = "4..6")]
        n: RangeArg,
        /// Instances per (vertices, n) cell.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Generator cap for the exhaustive linear-quotients oracle.
        #[arg(long = "lq-cap", default_value_t = DEFAULT_LQ_CAP)]
        lq_cap: usize,
        /// Generator cap for the homology oracle.
        #[arg(long = "hom-cap", default_value_t = DEFAULT_GENERATOR_CAP)]
        hom_cap: usize,
        /// Worker threads (0 = default pool).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Inclusive integer range argument: `A..B` or a bare `N`.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    lo: usize,
    hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("`{t}` is not an integer"))
        };
        if let Some((a, b)) = s.split_once("..") {
            let (lo, hi) = (parse(a)?, parse(b)?);
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(RangeArg { lo, hi })
        } else {
            let v = parse(s)?;
            Ok(RangeArg { lo: v, hi: v })
        }
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

enum LoadedGraph {
    Tree(Tree),
    Forest(SimpleGraph),
}

impl LoadedGraph {
    fn as_graph(&self) -> &SimpleGraph {
        match self {
            LoadedGraph::Tree(t) => t.as_graph(),
            LoadedGraph::Forest(g) => g,
        }
    }

    fn into_tree(self) -> Result<Tree, InputError> {
        match self {
            LoadedGraph::Tree(t) => Ok(t),
            LoadedGraph::Forest(_) => Err(InputError(
                "this command needs a tree, not a disconnected graph".into(),
            )),
        }
    }
}

fn load(input: &InputArgs) -> Result<LoadedGraph, InputError> {
    match (&input.file, &input.family) {
        (Some(_), Some(_)) => Err(InputError("pass a FILE or --family, not both".into())),
        (None, None) => Err(InputError("pass a FILE or --family".into())),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
            let tree = Tree::parse(&text).map_err(|e| InputError(e.to_string()))?;
            Ok(LoadedGraph::Tree(tree))
        }
        (None, Some(spec)) => {
            let spec: GraphFamilySpec = spec.parse().map_err(|e| InputError(format!("{e}")))?;
            match make_family(&spec).map_err(|e| InputError(e.to_string()))? {
                FamilyGraph::Tree(t) => Ok(LoadedGraph::Tree(t)),
                FamilyGraph::Forest(g) => Ok(LoadedGraph::Forest(g)),
            }
        }
    }
}

fn tree_json(g: &SimpleGraph) -> serde_json::Value {
    let edges: Vec<[&str; 2]> = g
        .edges()
        .into_iter()
        .map(|(u, v)| [g.label(u), g.label(v)])
        .collect();
    json!({ "vertices": g.labels(), "edges": edges })
}

fn cmd_classify(
    input: &InputArgs,
    n: usize,
    as_json: bool,
    legacy: bool,
) -> Result<i32, InputError> {
    let tree = load(input)?.into_tree()?;
    let result = if legacy && (n == 2 || n == 3) {
        classify_legacy_n23(&tree, n)
    } else {
        classify(&tree, n)
    };
    let c = result.map_err(|e| InputError(e.to_string()))?;
    if as_json {
        println!("{}", c.to_json(&tree));
    } else {
        println!("verdict: {}", c.verdict.as_str());
        println!("criterion_clause: {}", c.clause.as_str());
        println!("diameter: {}", c.diameter);
        if let Some(trimmed) = &c.trimmed_labels {
            println!("trimmed_vertices: {}", trimmed.join(" "));
        }
        match &c.witness {
            Witness::Order(order) => {
                println!("witness: quotient order on {} generator(s)", order.len());
                for (k, g) in order.generators().iter().enumerate() {
                    let gen = g.label_support(tree.labels()).join("*");
                    if k == 0 {
                        println!("  {}: {gen}", k + 1);
                    } else {
                        let cert: Vec<&str> = order
                            .certificate(k)
                            .iter()
                            .map(|&v| tree.label(v))
                            .collect();
                        println!("  {}: {gen}  (colon = {})", k + 1, cert.join(", "));
                    }
                }
            }
            Witness::Forbidden(w) => {
                let verts: Vec<&str> = w.vertices().iter().map(|&v| tree.label(v)).collect();
                println!("witness: forbidden induced subgraph on {{{}}}", verts.join(", "));
            }
            Witness::DiameterBound { required } => {
                println!("witness: diameter {} < {required}, so J_{n} = (0)", c.diameter);
            }
        }
    }
    Ok(match c.verdict {
        Verdict::NotLinearQuotients => 1,
        _ => 0,
    })
}

fn cmd_gens(input: &InputArgs, n: usize, as_json: bool) -> Result<i32, InputError> {
    let graph = load(input)?;
    let ideal = path_ideal(graph.as_graph(), n);
    if as_json {
        println!("{}", json!(ideal.generator_labels()));
    } else {
        for g in ideal.generator_labels() {
            println!("{}", g.join(" "));
        }
        eprintln!("{} generator(s)", ideal.num_generators());
    }
    Ok(0)
}

fn cmd_trim(input: &InputArgs, as_json: bool) -> Result<i32, InputError> {
    let tree = load(input)?.into_tree()?;
    let trimmed = tree.trim().map_err(|e| InputError(e.to_string()))?;
    if as_json {
        println!("{}", tree_json(&trimmed));
    } else {
        println!("vertices: {}", trimmed.labels().join(" "));
        for (u, v) in trimmed.edges() {
            println!("{} {}", trimmed.label(u), trimmed.label(v));
        }
    }
    Ok(0)
}

fn cmd_order(input: &InputArgs, n: usize, as_json: bool) -> Result<i32, InputError> {
    let tree = load(input)?.into_tree()?;
    let c = classify(&tree, n).map_err(|e| InputError(e.to_string()))?;
    match (&c.witness, c.verdict) {
        (Witness::Order(order), _) => {
            if as_json {
                println!("{}", order.to_json(tree.labels()));
            } else {
                for (k, g) in order.generators().iter().enumerate() {
                    println!("{}: {}", k + 1, g.label_support(tree.labels()).join("*"));
                }
            }
            Ok(0)
        }
        (_, Verdict::ZeroIdeal) => {
            if as_json {
                println!("{}", c.to_json(&tree));
            } else {
                println!("J_{n} is the zero ideal; the empty order works trivially");
            }
            Ok(0)
        }
        _ => {
            if as_json {
                println!("{}", c.to_json(&tree));
            } else {
                eprintln!("J_{n} has no linear-quotients order");
            }
            Ok(1)
        }
    }
}

fn cmd_reg(input: &InputArgs, n: usize, as_json: bool, hom_cap: usize) -> Result<i32, InputError> {
    let graph = load(input)?;
    let ideal = path_ideal(graph.as_graph(), n);
    if ideal.is_zero() {
        return Err(InputError(format!(
            "J_{n} is the zero ideal; regularity is undefined"
        )));
    }
    let table = betti_table_capped(&ideal, hom_cap).map_err(|e| InputError(e.to_string()))?;
    let reg = table.regularity().expect("nonzero ideal");
    if as_json {
        println!("{}", table.to_json());
    } else {
        print!("{table}");
        println!("regularity = {reg}");
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_fuzz(
    vertices: RangeArg,
    n: RangeArg,
    count: usize,
    seed: u64,
    lq_cap: usize,
    hom_cap: usize,
    threads: usize,
    as_json: bool,
) -> Result<i32, InputError> {
    let config = FuzzConfig {
        vertices: vertices.lo..=vertices.hi,
        n_values: n.lo..=n.hi,
        count,
        seed,
        caps: OracleCaps { lq_cap, hom_cap },
        threads,
    };
    config.validate().map_err(InputError)?;
    let report = fuzz::run(&config);
    if as_json {
        println!("{}", report.to_json());
    } else {
        println!(
            "instances: {} (LQ {}, not-LQ {}, zero {}; {} over the oracle cap)",
            report.instances,
            report.linear_quotients,
            report.not_linear_quotients,
            report.zero_ideal,
            report.skipped_cap,
        );
        println!("wall time: {} ms", report.wall_time_ms);
        for d in &report.disagreements {
            eprintln!("DISAGREEMENT: {d}");
        }
        if report.is_clean() {
            println!("no disagreements");
        }
    }
    Ok(if report.is_clean() { 0 } else { 3 })
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { input, n, json, legacy_n23 } => {
            cmd_classify(&input, n, json, legacy_n23)
        }
        Command::Gens { input, n, json } => cmd_gens(&input, n, json),
        Command::Trim { input, json } => cmd_trim(&input, json),
        Command::Order { input, n, json } => cmd_order(&input, n, json),
        Command::Reg { input, n, json, hom_cap } => cmd_reg(&input, n, json, hom_cap),
        Command::Fuzz { vertices, n, count, seed, lq_cap, hom_cap, threads, json } => {
            cmd_fuzz(vertices, n, count, seed, lq_cap, hom_cap, threads, json)
        }
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}
