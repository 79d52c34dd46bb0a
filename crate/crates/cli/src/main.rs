use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use wildnum::families::{generate, FamilySpec};
use wildnum::sat::{build_gadget, parse_dimacs, verify_gadget, wild_set_to_assignment, SatError};
use wildnum::{
    bounds_report, export_dot, format_wild_set, greedy_wild_set, parse_graph, parse_wild_set, serialize_graph,
    wild_brute, wild_exact_with, EdgeColoredGraph, ExactOptions, ExactResult, WildSet,
};

mod report;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "wildnum", version, about = "Wild numbers of edge-colored multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverMethod {
    Bb,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Print every lower and upper bound with the rule that produced it.
    Bounds { file: PathBuf },
    /// Run the greedy heuristic.
    Greedy {
        file: PathBuf,
        /// Print the dip and potential tables of every round.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the wild number and an ideal wild set.
    Exact {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "bb")]
        method: SolverMethod,
        /// Give up after this many seconds and print the bounds bracket.
        #[arg(long, value_name = "SECS")]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check whether a wild set color-connects the graph.
    Check {
        file: PathBuf,
        /// Comma-separated 1-based edge ids or u-v-color triples.
        #[arg(long)]
        wild: String,
    },
    /// Build the gadget graph of a 3-CNF formula.
    Reduce {
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Read a satisfying assignment off an ideal wild set of a gadget.
    Extract {
        cnf: PathBuf,
        graph: PathBuf,
        #[arg(long)]
        wild: String,
    },
    /// Generate a fixture or family member, e.g. `gen cycle 1,1,2 -o c.wng`.
    Gen {
        family: String,
        args: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export Graphviz DOT, wild edges dashed.
    Dot {
        file: PathBuf,
        #[arg(long)]
        wild: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<EdgeColoredGraph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_wild(g: &EdgeColoredGraph, text: &str) -> Result<WildSet> {
    let (w, warnings) = parse_wild_set(g, text)?;
    for warning in warnings {
        eprintln!("warning: {warning}");
    }
    Ok(w)
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Bounds { file } => {
            let g = load_graph(&file)?;
            print!("{}", report::bounds_text(&g, &bounds_report(&g)));
            Ok(EXIT_OK)
        }
        Command::Greedy { file, trace } => {
            let g = load_graph(&file)?;
            let (w, t) = greedy_wild_set(&g);
            if trace {
                print!("{}", report::trace_text(&g, &t));
            }
            let order: Vec<String> = t.chosen.iter().map(|&e| report::edge_label(&g, e)).collect();
            println!("greedy size = {}", w.len());
            println!("order = {}", order.join(", "));
            println!("wild = {}", format_wild_set(&w));
            Ok(EXIT_OK)
        }
        Command::Exact { file, method, time_limit, threads } => exact(&file, method, time_limit, threads),
        Command::Check { file, wild } => {
            let g = load_graph(&file)?;
            let w = load_wild(&g, &wild)?;
            let kappas = g.kappas_with(&w);
            let split: Vec<String> = kappas
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 1)
                .map(|(c, k)| format!("{} ({k} components)", g.palette()[c]))
                .collect();
            if split.is_empty() {
                println!("color-connecting, size {}", w.len());
                Ok(EXIT_OK)
            } else {
                println!("not color-connecting: {}", split.join(", "));
                Ok(EXIT_FAILED)
            }
        }
        Command::Reduce { cnf, output } => {
            let f = parse_dimacs(&read(&cnf)?).with_context(|| format!("parsing {}", cnf.display()))?;
            let gg = build_gadget(&f);
            if let Err(v) = verify_gadget(&gg) {
                eprintln!("gadget verification failed: {v}");
                return Ok(EXIT_FAILED);
            }
            let text = format!(
                "c gadget for {} clauses over {} variables\n{}",
                f.l(),
                f.k(),
                serialize_graph(&gg.graph)
            );
            emit(Some(&output), &text)?;
            let kappas: Vec<String> = gg.graph.kappas().iter().map(|k| k.to_string()).collect();
            println!("n = {}, m = {}, colors = {}", gg.graph.n(), gg.graph.m(), gg.graph.colors());
            println!("kappa = {}", kappas.join(" "));
            println!("satisfiable iff wild = {}", f.k());
            Ok(EXIT_OK)
        }
        Command::Extract { cnf, graph, wild } => {
            let f = parse_dimacs(&read(&cnf)?).with_context(|| format!("parsing {}", cnf.display()))?;
            let gg = build_gadget(&f);
            let g = load_graph(&graph)?;
            if g != gg.graph {
                bail!("{} is not the gadget graph of {}", graph.display(), cnf.display());
            }
            let w = load_wild(&g, &wild)?;
            match wild_set_to_assignment(&gg, &w) {
                Ok(a) => {
                    let lits: Vec<String> =
                        a.iter().enumerate().map(|(j, &t)| if t { format!("{}", j + 1) } else { format!("-{}", j + 1) }).collect();
                    println!("v {} 0", lits.join(" "));
                    Ok(EXIT_OK)
                }
                Err(e @ (SatError::NotColorConnecting | SatError::WrongSize { .. } | SatError::MissingPairEdge { .. })) => {
                    println!("no assignment: {e}");
                    Ok(EXIT_FAILED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Gen { family, args, output } => {
            let mut spec = FamilySpec::parse(&family, &args)?;
            if let FamilySpec::Random { seed, .. } = &mut spec {
                if let Ok(s) = std::env::var("WILDNUM_SEED") {
                    *seed = s.trim().parse().with_context(|| format!("WILDNUM_SEED `{s}` is not an integer"))?;
                }
            }
            let g = generate(&spec)?;
            emit(output.as_deref(), &serialize_graph(&g))?;
            Ok(EXIT_OK)
        }
        Command::Dot { file, wild, output } => {
            let g = load_graph(&file)?;
            let w = wild.map(|s| load_wild(&g, &s)).transpose()?;
            emit(output.as_deref(), &export_dot(&g, w.as_ref()))?;
            Ok(EXIT_OK)
        }
    }
}

fn exact(file: &Path, method: SolverMethod, time_limit: Option<f64>, threads: usize) -> Result<u8> {
    let g = load_graph(file)?;
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let limit = match time_limit {
        Some(s) if !(s.is_finite() && s > 0.0) => bail!("--time-limit must be a positive number of seconds"),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let (tx, rx) = mpsc::channel::<ExactResult>();
    let solver_graph = g.clone();
    thread::spawn(move || {
        let result = match method {
            SolverMethod::Bb => {
                wild_exact_with(&solver_graph, &ExactOptions { threads, ..ExactOptions::default() })
            }
            SolverMethod::Brute => wild_brute(&solver_graph, None).expect("uncapped search always finishes"),
        };
        let _ = tx.send(result);
    });
    let result = match limit {
        Some(d) => match rx.recv_timeout(d) {
            Ok(r) => r,
            Err(mpsc::RecvTimeoutError::Timeout) => {
                let r = bounds_report(&g);
                println!("time limit reached");
                println!("wild in [{}, {}]", r.best_lb, r.best_ub);
                return Ok(EXIT_TIMEOUT);
            }
            Err(mpsc::RecvTimeoutError::Disconnected) => bail!("solver thread failed"),
        },
        None => rx.recv().context("solver thread failed")?,
    };
    let labels: Vec<String> = result.witness.iter().map(|e| report::edge_label(&g, e)).collect();
    println!("wild = {}", result.wild);
    println!("witness = {}", format_wild_set(&result.witness));
    println!("edges = {}", labels.join(", "));
    println!("method = {}, nodes = {}", result.method.as_str(), result.nodes_explored);
    Ok(EXIT_OK)
}
