//! Command-line interface for the top-k overlapping densest subgraphs
//! toolkit.
//!
//! Graphs arrive as edge-list text (`u v` per line, `#` comments) on stdin
//! or via `--input`. Exit codes: 0 success, 2 parse/contract error,
//! 3 oracle budget exceeded, 4 certification refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;
use topk_densest::distinct::{
    densest_distinct_constant_k, densest_distinct_no_crossing, has_crossing_pair,
};
use topk_densest::error::Error;
use topk_densest::flow;
use topk_densest::gen::{generate_graph, GraphSpec};
use topk_densest::graph::{Graph, SubgraphCollection, VertexSet};
use topk_densest::oracle::{oracle_topk, OracleBudget};
use topk_densest::rational::{decimal_string, fraction_string, parse_rational};
use topk_densest::reduction::{
    build_hardness_instance, extract_partition_from_solution, hardness_threshold,
    verify_partition_to_solution,
};
use topk_densest::report::{
    DensestDocument, HardnessInstanceDocument, PartitionDocument, ReportDocument,
};
use topk_densest::topk::{solve_with, SolveMode, SolveOptions, SolveReport};

#[derive(Parser)]
#[command(
    name = "topkds",
    version,
    about = "Exact and approximate top-k overlapping densest subgraph solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve top-k overlapping densest subgraphs on the input graph.
    Solve(SolveArgs),
    /// Exact densest subgraph, optionally constrained or via peeling.
    Densest(DensestArgs),
    /// Densest subgraph distinct from every given subgraph.
    Dds(DdsArgs),
    /// Exhaustive top-k oracle (budgeted).
    Oracle(OracleArgs),
    /// Hardness-reduction instances: build, verify, extract.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Generate a graph and print it as an edge list.
    Gen(GenArgs),
    /// Per-stage timings and max-flow call counts, as CSV rows.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file; stdin when omitted.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short = 'k')]
    k: usize,
    /// Decimal ("0.01") or fraction ("1/100").
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    /// Largest graph the exact-oracle route accepts.
    #[arg(long, default_value_t = 7)]
    oracle_max_n: u32,
    /// Largest k served by the constant-k route in auto mode.
    #[arg(long, default_value_t = 4)]
    constant_k_cutoff: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    ConstantK,
    General,
    Oracle,
}

impl Mode {
    fn to_solve_mode(self) -> SolveMode {
        match self {
            Mode::Auto => SolveMode::Auto,
            Mode::ConstantK => SolveMode::ConstantK,
            Mode::General => SolveMode::General,
            Mode::Oracle => SolveMode::Oracle,
        }
    }
}

#[derive(Args)]
struct DensestArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated labels that must be inside the subgraph.
    #[arg(long)]
    include: Option<String>,
    /// Comma-separated labels that must stay outside.
    #[arg(long)]
    exclude: Option<String>,
    #[arg(long, value_enum, default_value_t = DensestMethod::Flow)]
    method: DensestMethod,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DensestMethod {
    Flow,
    Peel,
}

#[derive(Args)]
struct DdsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// A subgraph as comma-separated labels; repeat per subgraph.
    #[arg(long = "w", required = true)]
    w: Vec<String>,
    #[arg(long, value_enum, default_value_t = DdsSolver::Auto)]
    solver: DdsSolver,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DdsSolver {
    Auto,
    ConstantK,
    NoCrossing,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short = 'k')]
    k: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long, default_value_t = 7)]
    max_n: u32,
    #[arg(long, default_value_t = 2_000_000)]
    max_collections: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Wrap the input graph as a top-3 hardness instance.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certify a clique partition as a top-3 solution.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// A part as comma-separated labels; exactly three parts.
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recover a clique partition from a scoring top-3 solution.
    Extract {
        #[command(flatten)]
        input: InputArgs,
        /// A subgraph as comma-separated labels; exactly three.
        #[arg(long = "w", required = true)]
        w: Vec<String>,
        /// Certification threshold override (defaults to (n-3)/2 + 18n^3).
        #[arg(long)]
        threshold: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u64>,
    /// Comma-separated block sizes for disjoint-cliques / planted-partition.
    #[arg(long)]
    sizes: Option<String>,
    #[arg(long, default_value_t = 0.5)]
    p_in: f64,
    #[arg(long, default_value_t = 0.1)]
    p_out: f64,
    #[arg(long)]
    pairs: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Gnm,
    Complete,
    DisjointCliques,
    PlantedPartition,
    Path,
    Cycle,
    Matching,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short = 'k')]
    k: usize,
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Solve(args) => {
            let g = read_graph(&args.input)?;
            let options = SolveOptions {
                mode: args.mode.to_solve_mode(),
                budget: OracleBudget::with_max_vertices(args.oracle_max_n),
                constant_k_cutoff: args.constant_k_cutoff,
            };
            let lambda = parse_rational(&args.lambda)?;
            let report = solve_with(&g, args.k, &lambda, &options)?;
            emit_report(&g, &report, &args.output)
        }
        Command::Densest(args) => {
            let g = read_graph(&args.input)?;
            let include = parse_label_set(&g, args.include.as_deref())?;
            let exclude = parse_label_set(&g, args.exclude.as_deref())?;
            let result = match args.method {
                DensestMethod::Flow => {
                    flow::constrained_densest_subgraph(&g, include.as_ref(), exclude.as_ref())?
                }
                DensestMethod::Peel => {
                    if include.is_some() || exclude.is_some() {
                        return Err(Error::contract(
                            "peeling does not support include/exclude constraints",
                        ));
                    }
                    flow::greedy_peel(&g)?
                }
            };
            emit_densest(&g, &result, &args.output)
        }
        Command::Dds(args) => {
            let g = read_graph(&args.input)?;
            let w = parse_collection(&g, &args.w)?;
            let result = match args.solver {
                DdsSolver::ConstantK => densest_distinct_constant_k(&g, &w)?,
                DdsSolver::NoCrossing => densest_distinct_no_crossing(&g, &w)?,
                DdsSolver::Auto => {
                    if has_crossing_pair(&w).is_none() {
                        densest_distinct_no_crossing(&g, &w)?
                    } else {
                        densest_distinct_constant_k(&g, &w)?
                    }
                }
            };
            emit_densest(&g, &result, &args.output)
        }
        Command::Oracle(args) => {
            let g = read_graph(&args.input)?;
            let lambda = parse_rational(&args.lambda)?;
            let budget = OracleBudget {
                max_vertices: args.max_n,
                max_collections: args.max_collections,
            };
            let report = oracle_topk(&g, args.k, &lambda, &budget)?;
            emit_report(&g, &report, &args.output)
        }
        Command::Reduce(cmd) => run_reduce(cmd),
        Command::Gen(args) => run_gen(args),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_reduce(cmd: ReduceCommand) -> Result<(), Error> {
    match cmd {
        ReduceCommand::Build { input, output } => {
            let g = read_graph(&input)?;
            let inst = build_hardness_instance(g)?;
            let doc = HardnessInstanceDocument::from_instance(&inst);
            match output.format {
                Format::Json => write_out(&output.output, &doc.to_json()),
                Format::Text => write_out(
                    &output.output,
                    &format!(
                        "n = {}\nm = {}\nk = {}\nlambda = {}\nthreshold = {} ({})\n",
                        inst.graph.vertex_count(),
                        inst.graph.edge_count(),
                        inst.k,
                        fraction_string(&inst.lambda),
                        fraction_string(&inst.threshold),
                        decimal_string(&inst.threshold, 12),
                    ),
                ),
            }
        }
        ReduceCommand::Verify {
            input,
            parts,
            output,
        } => {
            let g = read_graph(&input)?;
            if parts.len() != 3 {
                return Err(Error::contract(format!(
                    "expected exactly 3 --part flags, got {}",
                    parts.len()
                )));
            }
            let sets: Vec<VertexSet> = parts
                .iter()
                .map(|p| parse_labels(&g, p))
                .collect::<Result<_, _>>()?;
            let parts: [VertexSet; 3] = [sets[0].clone(), sets[1].clone(), sets[2].clone()];
            let report = verify_partition_to_solution(&g, &parts)?;
            emit_report(&g, &report, &output)
        }
        ReduceCommand::Extract {
            input,
            w,
            threshold,
            output,
        } => {
            let g = read_graph(&input)?;
            let collection = parse_collection(&g, &w)?;
            let threshold = match threshold {
                Some(t) => parse_rational(&t)?,
                None => hardness_threshold(g.vertex_count()),
            };
            let partition = extract_partition_from_solution(&g, &collection, &threshold)?;
            let doc = PartitionDocument::from_partition(&g, &partition);
            match output.format {
                Format::Json => write_out(&output.output, &doc.to_json()),
                Format::Text => {
                    let mut text = String::from("certified clique partition:\n");
                    for (i, part) in partition.parts.iter().enumerate() {
                        text.push_str(&format!("  part {}: {}\n", i, part.labels(&g).join(" ")));
                    }
                    write_out(&output.output, &text)
                }
            }
        }
    }
}

fn run_gen(args: GenArgs) -> Result<(), Error> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::contract("--n is required for this kind"))
    };
    let spec = match args.kind {
        GenKind::Gnm => GraphSpec::Gnm {
            n: need_n()?,
            m: args
                .m
                .ok_or_else(|| Error::contract("--m is required for gnm"))?,
        },
        GenKind::Complete => GraphSpec::Complete { n: need_n()? },
        GenKind::DisjointCliques => GraphSpec::DisjointCliques {
            sizes: parse_sizes(args.sizes.as_deref())?,
        },
        GenKind::PlantedPartition => GraphSpec::PlantedPartition {
            sizes: parse_sizes(args.sizes.as_deref())?,
            p_in: args.p_in,
            p_out: args.p_out,
        },
        GenKind::Path => GraphSpec::Path { n: need_n()? },
        GenKind::Cycle => GraphSpec::Cycle { n: need_n()? },
        GenKind::Matching => GraphSpec::Matching {
            pairs: args
                .pairs
                .ok_or_else(|| Error::contract("--pairs is required for matching"))?,
        },
    };
    let g = generate_graph(&spec, args.seed)?;
    write_out(&args.output, &g.to_edge_list_string())
}

fn run_bench(args: BenchArgs) -> Result<(), Error> {
    let g = read_graph(&args.input)?;
    let lambda = parse_rational(&args.lambda)?;
    let mut rows = String::from("stage,wall_ms,max_flow_runs\n");
    let stage = |rows: &mut String,
                 name: &str,
                 f: &mut dyn FnMut() -> Result<(), Error>|
     -> Result<(), Error> {
        flow::reset_max_flow_runs();
        let start = Instant::now();
        f()?;
        rows.push_str(&format!(
            "{},{:.3},{}\n",
            name,
            start.elapsed().as_secs_f64() * 1e3,
            flow::max_flow_runs()
        ));
        Ok(())
    };

    stage(&mut rows, "densest_subgraph", &mut || {
        flow::densest_subgraph(&g).map(|_| ())
    })?;
    stage(&mut rows, "greedy_peel", &mut || {
        flow::greedy_peel(&g).map(|_| ())
    })?;

    let options = SolveOptions {
        mode: args.mode.to_solve_mode(),
        ..SolveOptions::default()
    };
    let mut report: Option<SolveReport> = None;
    stage(&mut rows, "solve", &mut || {
        report = Some(solve_with(&g, args.k, &lambda, &options)?);
        Ok(())
    })?;
    if let Some(r) = &report {
        rows.push_str(&format!(
            "# algorithm={} r={} phase_boundary={}\n",
            r.algorithm.as_str(),
            fraction_string(&r.r_value),
            r.phase_boundary.map_or("-".into(), |b| b.to_string()),
        ));
    }
    write_out(&args.output, &rows)
}

// ---------------------------------------------------------------------------
// input / output helpers
// ---------------------------------------------------------------------------

fn read_graph(input: &InputArgs) -> Result<Graph, Error> {
    let text = match &input.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse {
                    line: 0,
                    message: format!("cannot read stdin: {e}"),
                })?;
            buf
        }
    };
    let parsed = Graph::parse_edge_list(&text)?;
    if parsed.duplicate_edges > 0 {
        eprintln!(
            "warning: collapsed {} duplicate edge line(s)",
            parsed.duplicate_edges
        );
    }
    Ok(parsed.graph)
}

fn parse_labels(g: &Graph, text: &str) -> Result<VertexSet, Error> {
    let ids = text
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            g.vertex_by_label(t)
                .ok_or_else(|| Error::contract(format!("unknown vertex label {t:?}")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    VertexSet::new(ids)
}

fn parse_label_set(g: &Graph, text: Option<&str>) -> Result<Option<VertexSet>, Error> {
    text.map(|t| parse_labels(g, t)).transpose()
}

fn parse_collection(g: &Graph, sets: &[String]) -> Result<SubgraphCollection, Error> {
    SubgraphCollection::new(
        sets.iter()
            .map(|s| parse_labels(g, s))
            .collect::<Result<Vec<_>, Error>>()?,
    )
}

fn parse_sizes(text: Option<&str>) -> Result<Vec<u32>, Error> {
    let text = text.ok_or_else(|| Error::contract("--sizes is required for this kind"))?;
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::contract(format!("bad size {t:?}")))
        })
        .collect()
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Error::contract(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_report(g: &Graph, report: &SolveReport, out: &OutputArgs) -> Result<(), Error> {
    match out.format {
        Format::Json => write_out(&out.output, &ReportDocument::from_report(g, report).to_json()),
        Format::Text => {
            let mut text = String::new();
            text.push_str(&format!(
                "algorithm: {}\nk = {}, lambda = {}\nr(W) = {} ({})\n",
                report.algorithm.as_str(),
                report.k,
                fraction_string(&report.lambda),
                fraction_string(&report.r_value),
                decimal_string(&report.r_value, 12),
            ));
            if let Some(b) = report.phase_boundary {
                text.push_str(&format!("phase boundary: {b}\n"));
            }
            for (i, member) in report.collection.members().iter().enumerate() {
                text.push_str(&format!(
                    "  W{}: dens = {} | {}\n",
                    i + 1,
                    fraction_string(&report.densities[i]),
                    member.labels(g).join(" ")
                ));
            }
            write_out(&out.output, &text)
        }
    }
}

fn emit_densest(g: &Graph, r: &flow::DensestResult, out: &OutputArgs) -> Result<(), Error> {
    match out.format {
        Format::Json => write_out(&out.output, &DensestDocument::from_result(g, r).to_json()),
        Format::Text => write_out(
            &out.output,
            &format!(
                "density = {} ({})\nvertices: {}\n",
                fraction_string(&r.dens),
                decimal_string(&r.dens, 12),
                r.set.labels(g).join(" ")
            ),
        ),
    }
}
