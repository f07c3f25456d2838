use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qindex_core::bounds::bounds_report;
use qindex_core::constructions as cons;
use qindex_core::graph6;
use qindex_core::lemmas::{run_suite, Suite, SuiteOptions};
use qindex_core::odd_cycle::{is_bipartite, odd_girth, shortest_odd_cycle};
use qindex_core::partitions::{quotient, ratio_to_json_string, verify_quotient_eigenvalue, VertexPartition};
use qindex_core::poly::largest_real_root;
use qindex_core::search::{self, round12, SearchConfig};
use qindex_core::spectral::{char_poly, perron_vector, q_index, signless_laplacian};
use qindex_core::{Error, Graph, IntMatrix, IntegerPolynomial};

#[derive(Parser)]
#[command(name = "qindex", version, about = "Q-index tools for graphs without short odd cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GraphInput {
    /// Graph in graph6; read from --file or stdin when omitted.
    graph: Option<String>,
    /// File holding a graph6 line or an edge list.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Parallel {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Largest order accepted by order searches.
    #[arg(long, default_value_t = search::DEFAULT_ORDER_CAP)]
    order_cap: usize,
    /// Largest size accepted by size searches.
    #[arg(long, default_value_t = search::DEFAULT_SIZE_CAP)]
    size_cap: usize,
    /// Print the elapsed time on stderr.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Star,
    Complete,
    CompleteBipartite,
    BlowUpCycle,
    CycleStar,
    OrderExtremal,
    SNk,
    SNkPlus,
    G0,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph.
    Construct {
        family: Family,
        /// Family parameters, e.g. `cycle-star 2 11` or `blow-up-cycle 7 3,1,1,1,1,1,1`.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Largest eigenvalue of Q = D + A.
    Q(GraphInput),
    /// Positive unit eigenvector for the Q-index of a connected graph.
    Perron(GraphInput),
    /// Exact characteristic polynomial of Q(G) or of an integer matrix.
    Charpoly {
        #[command(flatten)]
        input: GraphInput,
        /// JSON file with a square integer matrix.
        #[arg(long, conflicts_with_all = ["graph", "file"])]
        matrix: Option<PathBuf>,
    },
    /// Quotient of Q(G) by a vertex partition given as JSON lists of vertices.
    Quotient {
        #[command(flatten)]
        input: GraphInput,
        /// Partition file, e.g. `[[0,1],[2,3,4]]`.
        #[arg(long)]
        partition: PathBuf,
    },
    /// Degree bounds on the Q-index and their equality cases.
    Bounds(GraphInput),
    /// Odd girth and one shortest odd cycle.
    Oddgirth(GraphInput),
    /// Exhaustive maximum Q-index over admissible graphs.
    Search {
        #[arg(long, conflicts_with = "size", required_unless_present = "size")]
        order: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        par: Parallel,
    },
    /// Certify an extremal result by exhaustive search.
    Certify {
        #[arg(long, value_parser = ["1.3", "1.4"])]
        theorem: String,
        #[arg(long, required_if_eq("theorem", "1.3"))]
        n: Option<usize>,
        #[arg(long, required_if_eq("theorem", "1.4"))]
        m: Option<usize>,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        par: Parallel,
    },
    /// Exhaustive check of the triangle-free edge bounds at order n.
    EdgeBounds {
        #[arg(long)]
        n: usize,
    },
    /// Run a property suite and report pass/fail.
    Lemmas {
        #[arg(long, value_parser = ["2.1", "2.2", "2.3", "2.4", "2.5", "3.1", "3.3"])]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        instances: Option<usize>,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = match (&input.graph, &input.file) {
        (Some(g), _) => return Ok(graph6::decode(g)?),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
            s
        }
    };
    Ok(graph6::parse_graph(&text)?)
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn poly_json(p: &IntegerPolynomial) -> Value {
    let coeffs: Vec<Value> =
        p.coeffs().iter().map(|c| serde_json::from_str(&c.to_string()).expect("integer literal")).collect();
    json!({ "coefficients": coeffs, "polynomial": p.to_string() })
}

fn num(params: &[String], i: usize) -> Result<usize, Failure> {
    params
        .get(i)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {}", i + 1)))?
        .parse()
        .map_err(|_| Failure::Usage(format!("parameter {} is not a count", i + 1)))
}

fn construct(family: Family, p: &[String]) -> Result<Graph, Failure> {
    let g = match family {
        Family::Cycle => cons::cycle(num(p, 0)?)?,
        Family::Path => cons::path(num(p, 0)?)?,
        Family::Star => cons::star(num(p, 0)?)?,
        Family::Complete => cons::complete(num(p, 0)?)?,
        Family::CompleteBipartite => cons::complete_bipartite(num(p, 0)?, num(p, 1)?)?,
        Family::BlowUpCycle => {
            let len = num(p, 0)?;
            let vector = p.get(1).ok_or_else(|| Failure::Usage("missing blow-up vector".into()))?;
            let entries = vector
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage("blow-up vector must be comma-separated counts".into()))?;
            cons::blow_up(&cons::cycle(len)?, &cons::BlowupVector::new(entries)?)?
        }
        Family::CycleStar => cons::cycle_star(num(p, 0)?, num(p, 1)?)?,
        Family::OrderExtremal => cons::order_extremal(num(p, 0)?, num(p, 1)?)?,
        Family::SNk => cons::s_nk(num(p, 0)?, num(p, 1)?)?,
        Family::SNkPlus => cons::s_nk_plus(num(p, 0)?, num(p, 1)?)?,
        Family::G0 => cons::g0(num(p, 0)?, num(p, 1)?)?.0,
    };
    Ok(g)
}

fn config(par: &Parallel) -> Result<SearchConfig, Failure> {
    if let Some(t) = par.threads {
        if t == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let cfg = SearchConfig { order_cap: par.order_cap, size_cap: par.size_cap, ..SearchConfig::default() };
    if cfg.above_defaults() {
        eprintln!(
            "warning: caps raised above defaults (order {}, size {}); runs may be slow",
            search::DEFAULT_ORDER_CAP,
            search::DEFAULT_SIZE_CAP
        );
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct { family, params, format } => {
            let g = construct(family, &params)?;
            match format {
                Format::Graph6 => println!("{}", graph6::encode(&g)),
                Format::Edges => print!("{}", graph6::to_edge_list(&g)),
            }
            Ok(())
        }
        Command::Q(input) => {
            let g = read_graph(&input)?;
            emit(&json!({ "schema": search::SCHEMA, "q": round12(q_index(&g)?) }));
            Ok(())
        }
        Command::Perron(input) => {
            let g = read_graph(&input)?;
            let p = perron_vector(&g)?;
            let entries: Vec<f64> = p.entries.iter().map(|&x| round12(x)).collect();
            let positive = p.entries.iter().all(|&x| x > 1e-12);
            emit(&json!({
                "schema": search::SCHEMA,
                "eigenvalue": round12(p.eigenvalue),
                "entries": entries,
                "positive": positive,
            }));
            verdict(positive)
        }
        Command::Charpoly { input, matrix } => {
            let m = match matrix {
                Some(path) => {
                    let rows: Vec<Vec<i64>> = serde_json::from_value(read_json(&path)?)
                        .map_err(|e| Failure::Usage(format!("matrix: {e}")))?;
                    IntMatrix::from_rows(rows)?
                }
                None => signless_laplacian(&read_graph(&input)?),
            };
            let p = char_poly(&m);
            let root = largest_real_root(&p, None).ok().map(round12);
            let mut out = poly_json(&p);
            out["schema"] = json!(search::SCHEMA);
            out["largest_real_root"] = json!(root);
            emit(&out);
            Ok(())
        }
        Command::Quotient { input, partition } => {
            let g = read_graph(&input)?;
            let lists: Vec<Vec<usize>> = serde_json::from_value(read_json(&partition)?)
                .map_err(|e| Failure::Usage(format!("partition: {e}")))?;
            let p = VertexPartition::from_lists(g.order(), &lists)?;
            let b = quotient(&signless_laplacian(&g), &p)?;
            let rows: Vec<Vec<String>> =
                b.rows().iter().map(|r| r.iter().map(ratio_to_json_string).collect()).collect();
            let mut out = json!({ "schema": search::SCHEMA, "matrix": rows, "equitable": b.is_equitable() });
            let mut pass = b.is_equitable();
            if let Some(int) = b.to_int_matrix() {
                out["characteristic_polynomial"] = poly_json(&char_poly(&int));
            }
            if pass && g.is_connected() {
                let rep = verify_quotient_eigenvalue(&g, &p)?;
                pass = rep.agrees(qindex_core::lemmas::QUOTIENT_TOL);
                out["q_index"] = json!(round12(rep.q_index));
                out["quotient_root"] = json!(round12(rep.quotient_root));
                out["difference"] = json!(rep.difference);
            }
            out["pass"] = json!(pass);
            emit(&out);
            verdict(pass)
        }
        Command::Bounds(input) => {
            let g = read_graph(&input)?;
            let r = bounds_report(&g)?;
            let consistent = !g.is_connected() || r.consistent();
            emit(&json!({
                "schema": search::SCHEMA,
                "q": round12(r.q),
                "edge_degree_bound": round12(r.edge_degree_bound),
                "degree_avg_bound": round12(r.degree_avg_bound),
                "regular": r.regular,
                "semiregular_bipartite": r.semiregular_bipartite,
                "edge_bound_tightness": r.edge_bound_tightness,
                "avg_bound_tightness": r.avg_bound_tightness,
                "pass": consistent,
            }));
            verdict(consistent)
        }
        Command::Oddgirth(input) => {
            let g = read_graph(&input)?;
            emit(&json!({
                "schema": search::SCHEMA,
                "bipartite": is_bipartite(&g),
                "odd_girth": odd_girth(&g),
                "cycle": shortest_odd_cycle(&g),
            }));
            Ok(())
        }
        Command::Search { order, size, k, par } => {
            let cfg = config(&par)?;
            let start = Instant::now();
            let report = match (order, size) {
                (Some(n), _) => search::max_q_by_order(n, k, &cfg)?,
                (None, Some(m)) => search::max_q_by_size(m, k, &cfg)?,
                (None, None) => return Err(Failure::Usage("give --order or --size".into())),
            };
            if par.timing {
                eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            emit(&report);
            Ok(())
        }
        Command::Certify { theorem, n, m, k, par } => {
            let cfg = config(&par)?;
            let start = Instant::now();
            let report = match theorem.as_str() {
                "1.3" => search::certify_theorem_1_3(n.expect("required by clap"), k, &cfg)?,
                _ => search::certify_theorem_1_4(m.expect("required by clap"), k, &cfg)?,
            };
            if par.timing {
                eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            emit(&report);
            eprintln!("{}", if report.pass { "PASS" } else { "FAIL" });
            verdict(report.pass)
        }
        Command::EdgeBounds { n } => {
            let report = search::classical_edge_bounds(n)?;
            emit(&report);
            verdict(report.pass)
        }
        Command::Lemmas { suite, seed, instances, verbose } => {
            let suite: Suite = suite.parse()?;
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                seed: seed.unwrap_or(defaults.seed),
                instances: instances.unwrap_or(defaults.instances),
                ..defaults
            };
            let report = run_suite(suite, &opts)?;
            for c in report.checks.iter().filter(|c| verbose || !c.pass || report.checks.len() <= 200) {
                println!("{} {}: {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            println!(
                "suite {}: {} instances, {} failures, {} inconclusive, {} for review",
                report.suite, report.instances, report.failures, report.inconclusive, report.review
            );
            println!("{}", if report.pass { "PASS" } else { "FAIL" });
            verdict(report.pass)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
