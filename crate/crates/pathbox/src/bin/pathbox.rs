use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathbox::bench::{self, Outcome};
use pathbox::format::{graph_from_text, graph_to_text, matrix_to_json, poly_to_json};
use pathbox::{suite, sweep, verify, Format, SweepConfig};
use pathbox_core::det::{DEFAULT_BLOCK_CEILING, DEFAULT_DIRECT_CEILING};
use pathbox_core::{path_charpoly, Graph, Limits, Method, SuiteBounds};

/// Exact determinants of adjacency matrices of grid graphs P_n x P_m.
#[derive(Parser)]
#[command(name = "pathbox", version)]
struct Cli {
    /// Worker threads for sweeps and identity runs [default: $PATHBOX_THREADS, else available parallelism]
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of A(P_n x P_m) by every method that fits the ceilings
    Det {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Ascending coefficients of q_n(x) = det(A(P_n) - xI) as a JSON array of strings
    Charpoly { n: u32 },
    /// Determinant table over 1..=max-n by 1..=max-m
    Sweep {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Exact checks of the path-polynomial identities
    Identities {
        /// Upper bound on k (and n) for every family [default: per-family bounds]
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: Option<u32>,
        #[arg(long, default_value_t = 5)]
        max_t: u32,
        #[arg(long, default_value_t = 4)]
        max_a: u32,
    },
    /// Wall-clock timings per method, CSV
    Bench {
        /// Comma-separated NxM list, e.g. 10x10,15x15
        #[arg(long, default_value = "")]
        sizes: String,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Dump P_n x P_m (or a graph read from an edge-list file)
    Graph {
        #[arg(required_unless_present = "file", value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(required_unless_present = "file", value_parser = clap::value_parser!(u32).range(1..))]
        m: Option<u32>,
        #[arg(long, conflicts_with_all = ["n", "m"])]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
}

#[derive(Args)]
struct MethodArgs {
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "direct,block,resultant,closed"
    )]
    methods: Vec<MethodArg>,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest n*m for the direct method
    #[arg(long, default_value_t = DEFAULT_DIRECT_CEILING, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    ceiling: usize,
    /// Largest m for the block method
    #[arg(long, default_value_t = DEFAULT_BLOCK_CEILING, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    block_ceiling: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            direct: self.ceiling,
            block: self.block_ceiling,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Block,
    Resultant,
    Closed,
}

impl MethodArgs {
    fn methods(&self) -> Vec<Method> {
        let mut out: Vec<Method> = self
            .methods
            .iter()
            .map(|m| match m {
                MethodArg::Direct => Method::Direct,
                MethodArg::Block => Method::Block,
                MethodArg::Resultant => Method::Resultant,
                MethodArg::Closed => Method::Closed,
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Matrix,
}

const THREADS_ENV: &str = "PATHBOX_THREADS";

/// Ok(true) means success; Ok(false) means a disagreement or failed identity.
fn run(cli: Cli) -> Result<bool> {
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .with_context(|| format!("{THREADS_ENV}={v:?} is not a thread count"))?,
            ),
            Err(_) => None,
        },
    };
    if threads == Some(0) {
        bail!("--threads must be at least 1");
    }
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Det {
            n,
            m,
            format,
            methods,
            limits,
        } => {
            let report = verify(n as usize, m as usize, &methods.methods(), &limits.limits());
            let text = match Format::from(format) {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => sweep::render(std::slice::from_ref(&report), Format::Csv),
                Format::Pretty => report.to_pretty(),
            };
            stdout.write_all(text.as_bytes())?;
            Ok(report.agree)
        }
        Command::Charpoly { n } => {
            writeln!(stdout, "{}", poly_to_json(&path_charpoly(n as usize)))?;
            Ok(true)
        }
        Command::Sweep {
            max_n,
            max_m,
            format,
            methods,
            limits,
        } => {
            let config = SweepConfig {
                max_n: max_n as usize,
                max_m: max_m as usize,
                methods: methods.methods(),
                format: format.into(),
                limits: limits.limits(),
                threads,
            };
            let reports = sweep::run_sweep(&config)?;
            stdout.write_all(sweep::render(&reports, config.format).as_bytes())?;
            let bad = sweep::disagreements(&reports);
            for (n, m) in &bad {
                eprintln!("disagreement at n={n}, m={m}");
            }
            Ok(bad.is_empty())
        }
        Command::Identities {
            max_k,
            max_t,
            max_a,
        } => {
            let mut bounds = match max_k {
                Some(k) => SuiteBounds::uniform(k as usize),
                None => SuiteBounds::default(),
            };
            bounds.annihilation_t = max_t as usize;
            bounds.power_a = max_a as usize;
            let reports = suite::run_suite(&bounds, threads)?;
            stdout.write_all(suite::render(&reports).as_bytes())?;
            Ok(suite::all_passed(&reports))
        }
        Command::Bench {
            sizes,
            reps,
            methods,
            limits,
        } => {
            let sizes = bench::parse_sizes(&sizes)?;
            let rows = bench::run_bench(&sizes, &methods.methods(), &limits.limits(), reps)?;
            stdout.write_all(bench::render_csv(&rows).as_bytes())?;
            let skipped = rows
                .iter()
                .filter(|r| r.outcome == Outcome::SkippedCeiling)
                .count();
            if skipped > 0 {
                eprintln!("{skipped} measurement(s) skipped by ceiling");
            }
            let bad = bench::disagreements(&rows);
            for (n, m) in &bad {
                eprintln!("disagreement at n={n}, m={m}");
            }
            Ok(bad.is_empty())
        }
        Command::Graph { n, m, file, format } => {
            let graph = match (file, n, m) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    graph_from_text(&text)?
                }
                (None, Some(n), Some(m)) => {
                    Graph::path(n as usize)?.box_product(&Graph::path(m as usize)?)
                }
                _ => bail!("give either N M or --file"),
            };
            match format {
                GraphFormat::Edges => stdout.write_all(graph_to_text(&graph).as_bytes())?,
                GraphFormat::Matrix => {
                    writeln!(stdout, "{}", matrix_to_json(&graph.adjacency_matrix()))?
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
