//! `diffusion`: command-line front end for `diffusion-core`.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on
//! success, 1 on domain errors (bad graph, subset or configuration, step
//! budget exhausted) and 2 on usage errors.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use diffusion_core::engine::{self, Configuration, DEFAULT_MAX_STEPS};
use diffusion_core::enumeration::{self, SearchEvent, SearchOptions, DEFAULT_CHECKPOINT_INTERVAL};
use diffusion_core::paths;
use diffusion_core::quiescence::{self, PqValue, ZeroStatus};
use diffusion_core::{GeneratorSpec, Graph, VertexSet};

#[derive(Parser, Debug)]
#[command(
    name = "diffusion",
    version,
    about = "Diffusion chip-firing and perturbation quiescence"
)]
struct Cli {
    /// Worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fire a configuration repeatedly and report its period.
    Simulate {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated stack sizes, one per vertex.
        #[arg(long, allow_hyphen_values = true)]
        config: String,
        /// Number of firings to trace (default: until the period is detected).
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Configuration left by perturbing a subset of the 0-configuration.
    Perturb {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        subset: SubsetArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate CCD, 0₂-invoking and 0-invoking for a subset.
    Check {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        subset: SubsetArg,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Count 0₂-invoking subsets.
    Count {
        #[command(flatten)]
        graph: GraphArg,
        /// Leave out the empty set and the full vertex set.
        #[arg(long)]
        exclude_trivial: bool,
    },
    /// Smallest nonempty 0-invoking subset size.
    Pq {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Smallest nonempty 0₂-invoking subset size.
    Pq2 {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Search every labelled graph of order n for a subset that is
    /// 0-invoking but not 0₂-invoking. Witnesses are printed as JSON lines.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected_only: bool,
        /// Only scan labellings with non-increasing degree sequence.
        #[arg(long)]
        degree_sorted_only: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Append `n edge_mask` progress lines to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the last line of the checkpoint file.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        #[arg(long, default_value_t = DEFAULT_CHECKPOINT_INTERVAL, hide = true)]
        checkpoint_interval: u64,
    },
    /// Path counts and PQ₂ by enumeration and by closed form.
    PathsTable {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Generator spec (`path:N`, `cycle:N`, `complete:N`, `kbip:A,B`,
    /// `kpartite:A,B,...`) or path to an edge-list file.
    #[arg(long)]
    graph: String,
}

#[derive(Args, Debug)]
struct SubsetArg {
    /// Comma-separated 0-based vertex indices (empty for the empty set).
    #[arg(long)]
    subset: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

/// A domain error: printed to stderr, exit status 1.
struct Failure(String);

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn load_graph(source: &str) -> CliResult<Graph> {
    if GeneratorSpec::looks_like_spec(source) {
        return Ok(source.parse::<GeneratorSpec>()?.build()?);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Failure(format!("cannot read graph file `{source}`: {e}")))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure(format!("{source}: {e}")))
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> CliResult<Vec<T>> {
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Failure(format!("bad {what} entry `{}`", tok.trim())))
        })
        .collect()
}

fn load_subset(g: &Graph, raw: &str) -> CliResult<VertexSet> {
    let indices: Vec<usize> = parse_list(raw, "subset")?;
    Ok(VertexSet::from_indices(g.vertex_count(), indices)?)
}

fn load_config(g: &Graph, raw: &str) -> CliResult<Configuration> {
    let stacks: Vec<i64> = parse_list(raw, "config")?;
    if stacks.len() != g.vertex_count() {
        return Err(Failure(format!(
            "config has {} stacks but the graph has {} vertices",
            stacks.len(),
            g.vertex_count()
        )));
    }
    Ok(Configuration::new(stacks))
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> CliResult<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SimulateOut<'a> {
    graph: &'a str,
    trace: Vec<Vec<i64>>,
    preperiod: usize,
    period: usize,
    period_configs: Vec<Vec<i64>>,
    steps_taken: usize,
}

#[derive(Serialize)]
struct PerturbOut<'a> {
    graph: &'a str,
    subset: Vec<usize>,
    configuration: Vec<i64>,
}

#[derive(Serialize)]
struct ZeroOut {
    status: &'static str,
    step: Option<usize>,
}

#[derive(Serialize)]
struct CheckOut<'a> {
    graph: &'a str,
    subset: Vec<usize>,
    ccd: bool,
    zero2: bool,
    zero: ZeroOut,
}

#[derive(Serialize)]
struct CountOut<'a> {
    graph: &'a str,
    include_trivial: bool,
    count: u64,
}

#[derive(Serialize)]
struct PqOut<'a> {
    graph: &'a str,
    pq: Option<usize>,
    status: &'static str,
}

#[derive(Serialize)]
struct Pq2Out<'a> {
    graph: &'a str,
    pq2: Option<usize>,
}

#[derive(Serialize)]
struct WitnessOut {
    n: usize,
    edge_mask: u64,
    edges: Vec<(usize, usize)>,
    subset: Vec<usize>,
    zero_step: usize,
    note: String,
}

#[derive(Serialize)]
struct PathRowOut {
    n: usize,
    j_bruteforce: u64,
    j_recurrence: u64,
    j_fibonacci: u64,
    pq2_bruteforce: usize,
    pq2_closed: usize,
}

fn stacks(configs: &[Configuration]) -> Vec<Vec<i64>> {
    configs.iter().map(|c| c.stacks().to_vec()).collect()
}

fn execute(command: Command, out: &mut impl Write) -> CliResult<()> {
    match command {
        Command::Simulate {
            graph,
            config,
            steps,
            max_steps,
            format,
        } => {
            let g = load_graph(&graph.graph)?;
            let c0 = load_config(&g, &config)?;
            // CSV with an explicit step count needs no period detection.
            let report = match (format, steps) {
                (Format::Csv, Some(_)) => None,
                _ => Some(engine::run(&g, &c0, max_steps)?),
            };
            let t_max = steps.unwrap_or_else(|| report.as_ref().map_or(0, |r| r.steps_taken));
            let trace = engine::trace(&g, &c0, t_max)?;
            match format {
                Format::Csv => write!(out, "{}", engine::trace_to_csv(&trace))?,
                Format::Json => {
                    let r = report.expect("period detection runs for JSON output");
                    emit_json(
                        out,
                        &SimulateOut {
                            graph: &graph.graph,
                            trace: stacks(&trace),
                            preperiod: r.preperiod,
                            period: r.period,
                            period_configs: stacks(&r.period_configs),
                            steps_taken: r.steps_taken,
                        },
                    )?;
                }
            }
        }
        Command::Perturb {
            graph,
            subset,
            format,
        } => {
            let g = load_graph(&graph.graph)?;
            let h = load_subset(&g, &subset.subset)?;
            let c = quiescence::perturb(&g, h);
            match format {
                Format::Csv => {
                    let trace = [Configuration::zero(g.vertex_count()), c];
                    write!(out, "{}", engine::trace_to_csv(&trace))?;
                }
                Format::Json => emit_json(
                    out,
                    &PerturbOut {
                        graph: &graph.graph,
                        subset: h.to_vec(),
                        configuration: c.into_stacks(),
                    },
                )?,
            }
        }
        Command::Check {
            graph,
            subset,
            max_steps,
        } => {
            let g = load_graph(&graph.graph)?;
            let h = load_subset(&g, &subset.subset)?;
            let outcome = quiescence::is_zero_invoking(&g, h, max_steps)?;
            let zero = match outcome.status {
                ZeroStatus::ReachedZero(t) => ZeroOut {
                    status: "reached_zero",
                    step: Some(t),
                },
                ZeroStatus::PeriodWithoutZero(_) => ZeroOut {
                    status: "period_without_zero",
                    step: None,
                },
                ZeroStatus::CapExceeded => ZeroOut {
                    status: "cap_exceeded",
                    step: None,
                },
            };
            emit_json(
                out,
                &CheckOut {
                    graph: &graph.graph,
                    subset: h.to_vec(),
                    ccd: quiescence::is_ccd(&g, h),
                    zero2: quiescence::is_zero2_invoking(&g, h),
                    zero,
                },
            )?;
        }
        Command::Count {
            graph,
            exclude_trivial,
        } => {
            let g = load_graph(&graph.graph)?;
            let count = enumeration::count_zero2_subsets(&g, !exclude_trivial)?;
            emit_json(
                out,
                &CountOut {
                    graph: &graph.graph,
                    include_trivial: !exclude_trivial,
                    count,
                },
            )?;
        }
        Command::Pq { graph, max_steps } => {
            let g = load_graph(&graph.graph)?;
            let (pq, status) = match quiescence::pq(&g, max_steps)? {
                PqValue::Exact(k) => (Some(k), "exact"),
                PqValue::Unknown { upper_bound } => (upper_bound, "unknown"),
                PqValue::None => (None, "none"),
            };
            emit_json(
                out,
                &PqOut {
                    graph: &graph.graph,
                    pq,
                    status,
                },
            )?;
        }
        Command::Pq2 { graph } => {
            let g = load_graph(&graph.graph)?;
            let pq2 = quiescence::pq2(&g)?;
            emit_json(
                out,
                &Pq2Out {
                    graph: &graph.graph,
                    pq2,
                },
            )?;
        }
        Command::Search {
            n,
            connected_only,
            degree_sorted_only,
            max_steps,
            checkpoint,
            resume,
            checkpoint_interval,
        } => {
            let options = SearchOptions {
                connected_only,
                degree_sorted_only,
                max_steps,
                checkpoint,
                resume,
                checkpoint_interval,
                interrupt: None,
            };
            let mut write_err: Option<io::Error> = None;
            let summary = enumeration::search_all_graphs(n, &options, |event| match event {
                SearchEvent::Witness { edge_mask, witness } => {
                    let line = WitnessOut {
                        n,
                        edge_mask,
                        edges: witness.graph.edges().to_vec(),
                        subset: witness.subset.to_vec(),
                        zero_step: witness.zero_step,
                        note: witness.note,
                    };
                    let result = serde_json::to_writer(&mut *out, &line)
                        .map_err(io::Error::from)
                        .and_then(|_| writeln!(out))
                        .and_then(|_| out.flush());
                    if let Err(e) = result {
                        write_err.get_or_insert(e);
                    }
                }
                SearchEvent::Inconclusive {
                    edge_mask,
                    cap_hits,
                } => {
                    eprintln!(
                        "edge mask {edge_mask}: {cap_hits} subsets exhausted the step budget"
                    );
                }
                SearchEvent::Progress {
                    next_edge_mask,
                    graphs_scanned,
                    total_masks,
                } => {
                    eprintln!(
                        "progress {next_edge_mask}/{total_masks} ({graphs_scanned} graphs scanned)"
                    );
                }
            })?;
            if let Some(e) = write_err {
                return Err(e.into());
            }
            eprintln!(
                "done: {} graphs scanned, {} witnesses, {} inconclusive",
                summary.graphs_scanned, summary.witnesses, summary.inconclusive
            );
        }
        Command::PathsTable { n_max, format } => {
            let rows = paths::path_table(n_max)?;
            match format {
                Format::Csv => write!(out, "{}", paths::path_table_to_csv(&rows))?,
                Format::Json => {
                    let rows: Vec<PathRowOut> = rows
                        .into_iter()
                        .map(|r| PathRowOut {
                            n: r.n,
                            j_bruteforce: r.j_bruteforce,
                            j_recurrence: r.j_recurrence,
                            j_fibonacci: r.j_fibonacci,
                            pq2_bruteforce: r.pq2_bruteforce,
                            pq2_closed: r.pq2_closed,
                        })
                        .collect();
                    emit_json(out, &rows)?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = execute(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
