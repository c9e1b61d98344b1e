use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use treedist::distinguishing::{
    distinguishing_number_bruteforce_with, distinguishing_number_tree, DEFAULT_BRUTEFORCE_MAX_ORDER,
};
use treedist::enumeration::{
    census, to_ndjson, verify_main_theorem, CatalogEntry, TheoremId, TheoremReport, Universe,
};
use treedist::graph::{parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6};
use treedist::par::Execution;
use treedist::self_centered::{is_edge_minimal_2sc, is_two_self_centered};
use treedist::symmetry::{automorphisms_with, tree_aut_order, SearchLimits};
use treedist::tree::{RootedTree, Tree};
use treedist::{Error, Family, Graph};

const EXIT_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "treedist",
    version,
    about = "Distinguishing numbers, automorphisms and self-centered graphs"
)]
struct Cli {
    /// Print timings to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Metric invariants, automorphism group order and distinguishing number.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Replace the input by its complement.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Largest order for exhaustive automorphism and labeling searches.
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_MAX_ORDER)]
        max_order: usize,
        /// Largest automorphism group to materialize.
        #[arg(long, default_value_t = SearchLimits::default().max_elements)]
        max_elements: usize,
    },
    /// Exhaustively check one theorem, or all of them.
    Verify {
        /// main, thmrad, geq4, center_complement, corollary7, theorem15, theorem7 or all.
        theorem: String,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Directory for the catalog (graph6 list plus one DOT file per tree).
        #[arg(long, env = "TREEDIST_OUT_DIR")]
        out_dir: Option<PathBuf>,
        /// Run per-graph work on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Invariant records for every tree or connected graph on `n` vertices,
    /// as newline-delimited JSON.
    Census {
        #[arg(value_enum)]
        universe: UniverseKind,
        /// Number of vertices.
        n: usize,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Re-encode a graph.
    Convert {
        #[command(flatten)]
        input: Input,
        /// Replace the input by its complement.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value_t = Target::Graph6)]
        to: Target,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Read a graph6 string or an edge list from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    graph6: Option<String>,
    /// Edge list such as "3 2; 0 1; 1 2".
    #[arg(long)]
    edges: Option<String>,
    /// Named family followed by its parameters, e.g. `--family path 4`.
    #[arg(long, num_args = 1.., value_names = ["NAME", "PARAMS"])]
    family: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Graph6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseKind {
    Trees,
    Graphs,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() {
                EXIT_CAPACITY
            } else {
                EXIT_USAGE
            })
        }
        Err(Failure::Usage(msg) | Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let start = Instant::now();
    let code = match &cli.command {
        Command::Invariants {
            input,
            complement,
            format,
            max_order,
            max_elements,
        } => {
            let g = read_input(input, *complement)?;
            let report = invariants(&g, *max_order, *max_elements)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Human => print_invariants(&report),
            }
            0
        }
        Command::Verify {
            theorem,
            nmax,
            format,
            out_dir,
            sequential,
        } => verify(
            theorem,
            *nmax,
            *format,
            out_dir.as_deref(),
            exec(*sequential),
        )?,
        Command::Census {
            universe,
            n,
            output,
            sequential,
        } => {
            let universe = match universe {
                UniverseKind::Trees => Universe::Trees(*n),
                UniverseKind::Graphs => Universe::Graphs(*n),
            };
            let text = to_ndjson(&census(universe, exec(*sequential))?);
            match output {
                Some(path) => fs::write(path, text).map_err(|e| io_err(path, e))?,
                None => print!("{text}"),
            }
            0
        }
        Command::Convert {
            input,
            complement,
            to,
        } => {
            let g = read_input(input, *complement)?;
            match to {
                Target::Graph6 => println!("{}", write_graph6(&g)?),
                Target::Edges => print!("{}", write_edge_list(&g)),
                Target::Dot => print!("{}", write_dot(&g, &input_name(input))),
            }
            0
        }
    };
    if cli.verbose > 0 {
        eprintln!("elapsed {:.2?}", start.elapsed());
    }
    Ok(code)
}

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn input_name(input: &Input) -> String {
    match (&input.family, &input.file) {
        (Some(parts), _) => parts.join("_"),
        (None, Some(path)) => path
            .file_stem()
            .map_or("G".into(), |s| s.to_string_lossy().into()),
        _ => "G".into(),
    }
}

fn read_input(input: &Input, complement: bool) -> Result<Graph, Failure> {
    let g = if let Some(path) = &input.file {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        // A single token is graph6; anything else is an edge list.
        if text.split_whitespace().count() == 1 {
            parse_graph6(&text)?
        } else {
            parse_edge_list(&text)?
        }
    } else if let Some(s) = &input.graph6 {
        parse_graph6(s)?
    } else if let Some(s) = &input.edges {
        parse_edge_list(s)?
    } else if let Some(parts) = &input.family {
        let (name, params) = parts.split_first().expect("clap requires a name");
        let params = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("family parameter `{p}` is not a number")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Family::from_name(name, &params)?.build()?
    } else {
        unreachable!("clap requires one input source")
    };
    Ok(if complement { g.complement() } else { g })
}

fn invariants(g: &Graph, max_order: usize, max_elements: usize) -> Result<Value, Failure> {
    let profile = g.metric_profile();
    let finite = |x: u32| {
        if profile.is_finite() {
            json!(x)
        } else {
            json!("infinity")
        }
    };
    let tree = Tree::new(g.clone()).ok();
    let (d, witness, aut) = match &tree {
        Some(t) => {
            let r = distinguishing_number_tree(t);
            (
                r.value,
                r.witness,
                tree_aut_order(&RootedTree::at_center(t)),
            )
        }
        None => {
            let limits = SearchLimits {
                max_order,
                max_elements,
            };
            let aut = automorphisms_with(g, limits)?.order();
            let r = distinguishing_number_bruteforce_with(g, max_order)?;
            (r.value, r.witness, aut)
        }
    };
    let self_centered = profile.is_finite() && profile.radius() == profile.diameter();
    Ok(json!({
        "graph6": write_graph6(g).ok(),
        "n": g.order(),
        "m": g.size(),
        "radius": finite(profile.radius()),
        "diameter": finite(profile.diameter()),
        "center": profile.center(),
        "aut_order": aut.to_string(),
        "distinguishing_number": d,
        "witness": witness.labels(),
        "is_tree": tree.is_some(),
        "is_self_centered": self_centered,
        "is_2_self_centered": is_two_self_centered(g),
        "is_edge_minimal_2sc": is_edge_minimal_2sc(g),
    }))
}

fn print_invariants(r: &Value) {
    let fields = [
        ("graph6", "graph6"),
        ("n", "n"),
        ("m", "m"),
        ("radius", "radius"),
        ("diameter", "diameter"),
        ("center", "center"),
        ("|Aut|", "aut_order"),
        ("D", "distinguishing_number"),
        ("witness", "witness"),
        ("tree", "is_tree"),
        ("self-centered", "is_self_centered"),
        ("2-self-centered", "is_2_self_centered"),
        ("edge-minimal 2-self-centered", "is_edge_minimal_2sc"),
    ];
    for (label, key) in fields {
        let v = &r[key];
        let shown = v.as_str().map_or_else(|| v.to_string(), str::to_owned);
        println!("{label}: {shown}");
    }
}

fn verify(
    theorem: &str,
    nmax: usize,
    format: Format,
    out_dir: Option<&Path>,
    exec: Execution,
) -> Result<u8, Failure> {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(|_| {
            Failure::Usage(format!(
                "unknown theorem `{theorem}`; expected one of {}, all",
                TheoremId::ALL.map(TheoremId::as_str).join(", ")
            ))
        })?]
    };
    let mut reports = Vec::new();
    let mut catalog = None;
    for id in ids {
        // `all` lowers nmax per check; a single check rejects an oversized bound.
        let n = if theorem == "all" {
            nmax.min(id.max_order())
        } else {
            nmax
        };
        let mut report = if id == TheoremId::Main {
            let outcome = verify_main_theorem(n, exec)?;
            catalog = Some(outcome.catalog);
            outcome.report
        } else {
            id.run(n, exec)?
        };
        if n < nmax {
            report
                .notes
                .push(format!("nmax lowered from {nmax} to {n}"));
        }
        reports.push(report);
    }
    if let (Some(dir), Some(entries)) = (out_dir, &catalog) {
        write_catalog(dir, entries)?;
    }
    match format {
        Format::Json => {
            let mut doc = if reports.len() == 1 {
                serde_json::to_value(&reports[0]).unwrap()
            } else {
                json!({ "reports": reports })
            };
            if let Some(entries) = &catalog {
                doc["catalog"] = serde_json::to_value(entries).unwrap();
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Human => {
            for r in &reports {
                print_report(r);
            }
            if let Some(entries) = &catalog {
                println!("catalog ({} trees):", entries.len());
                for e in entries {
                    println!("{}", e.graph6);
                }
            }
        }
    }
    Ok(if reports.iter().all(TheoremReport::holds) {
        0
    } else {
        EXIT_VIOLATED
    })
}

fn print_report(r: &TheoremReport) {
    let status = serde_json::to_value(r.status).unwrap();
    println!(
        "{}: {} ({}, {} instances)",
        r.theorem_id,
        status.as_str().unwrap(),
        r.universe,
        r.instances_checked
    );
    for note in &r.notes {
        println!("  {note}");
    }
    for w in &r.violations {
        println!("  violation {w}");
    }
}

fn write_catalog(dir: &Path, entries: &[CatalogEntry]) -> Result<(), Failure> {
    let dot_dir = dir.join("dot");
    fs::create_dir_all(&dot_dir).map_err(|e| io_err(&dot_dir, e))?;
    let list: String = entries.iter().map(|e| format!("{}\n", e.graph6)).collect();
    let list_path = dir.join("catalog.g6");
    fs::write(&list_path, list).map_err(|e| io_err(&list_path, e))?;
    for (i, e) in entries.iter().enumerate() {
        let path = dot_dir.join(format!("{:03}_n{}.dot", i + 1, e.n));
        fs::write(&path, e.dot()).map_err(|e| io_err(&path, e))?;
    }
    Ok(())
}
