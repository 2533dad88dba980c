mod cache;
mod error;
mod output;
mod source;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secdom::bitset::VertexSet;
use secdom::constructions::{
    construct_gap_nonnegative, construct_gap_positive, construct_prescribed, ConstructionSpec,
};
use secdom::domination::is_secure_dominating;
use secdom::enumerate::enumerate_graphs;
use secdom::graph::Graph;
use secdom::graph6::to_graph6;
use secdom::mycielskian::mycielskian;
use secdom::solver::{min_dominating, min_secure_dominating, SolveResult};
use secdom::verify::{run_theorem, survey_row, RangeParams, TheoremId, Verdict};

use cache::{graph_key, Cache, RunRecord, CACHE_DIR_ENV};
use error::CliError;
use output::{ComputeOut, ConstructOut, ReportOut, ResultOut, SurveyOut};
use source::Instance;

#[derive(Parser)]
#[command(
    name = "secdom",
    version,
    about = "Exact domination and secure-domination computations on graphs and their Mycielskians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    /// Star K_{1,n}; --n is the leaf count.
    Star,
    /// Complete bipartite K_{m,n}; takes --m and --n.
    CompleteBipartite,
}

#[derive(Args)]
struct GraphSource {
    /// Generate a family member instead of reading a graph.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Family size parameter (the larger part for complete-bipartite).
    #[arg(long)]
    n: Option<usize>,
    /// First part size for complete-bipartite.
    #[arg(long)]
    m: Option<usize>,
    /// A single graph6-encoded graph.
    #[arg(long, value_name = "G6", conflicts_with_all = ["family", "file", "stdin"])]
    graph6: Option<String>,
    /// File of graph6 lines, one graph per line.
    #[arg(long, conflicts_with_all = ["family", "stdin"])]
    file: Option<PathBuf>,
    /// Read graph6 lines from standard input.
    #[arg(long, conflicts_with = "family")]
    stdin: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    /// The domination number.
    Gamma,
    /// The secure domination number.
    #[value(name = "gamma_s")]
    GammaS,
    /// Both parameters.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gamma and/or gamma_s with witness and defender certificate.
    Compute {
        #[command(flatten)]
        source: GraphSource,
        /// Which parameter(s) to compute.
        #[arg(long, value_enum, default_value = "both")]
        param: Param,
        /// Solve the Mycielskian of the input instead of the input itself.
        #[arg(long)]
        mycielskian: bool,
        /// Emit one JSON object per input graph.
        #[arg(long)]
        json: bool,
        /// Cache directory (overrides the SECDOM_CACHE_DIR environment
        /// variable; caching is off when neither is set).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Recompute cache hits and fail on any disagreement.
        #[arg(long)]
        recheck: bool,
    },
    /// Emit the Mycielskian of each input graph as a graph6 line.
    Mycielskian {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Build a graph with prescribed secure-domination behavior.
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Check one published claim over an instance range; exit 0 only if
    /// nothing fails.
    Verify {
        /// Claim id: T1 T2 L5 C6 T7 T8 P9 P10 L12 P13 P14 C15 P16 T17 T19
        /// T20 GAP+ GAP0 T22.
        id: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        sum_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        a_max: Option<usize>,
        /// Allow ranges past the pinned defaults (up to feasibility caps).
        #[arg(long)]
        override_caps: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Evaluate the open questions on a stream of instances.
    Survey {
        /// Read graph6 lines from standard input.
        #[arg(long)]
        stdin: bool,
        /// File of graph6 lines.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Survey all connected graphs up to this order (default source,
        /// order 5, when nothing else is given).
        #[arg(long, value_name = "N")]
        enumerate_max: Option<usize>,
        /// Survey this many seeded random graphs instead.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        /// Largest order for --random graphs.
        #[arg(long, default_value_t = 10)]
        order_max: usize,
        /// Seed for --random.
        #[arg(long, default_value_t = 0x5ecd0)]
        seed: u64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Smallest path with gamma_s(mu(G)) - gamma_s(G) = k.
    GapPositive {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Star with gamma_s(G) - gamma_s(mu(G)) = k.
    GapNonneg {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graph with gamma_s(G) = a and gamma_s(mu(G)) = b, 3 <= b <= 2a-1.
    Prescribed {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code);
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Compute {
            source,
            param,
            mycielskian,
            json,
            cache_dir,
            recheck,
        } => cmd_compute(&source, param, mycielskian, json, cache_dir, recheck),
        Command::Mycielskian { source } => cmd_mycielskian(&source),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Verify {
            id,
            n_max,
            sum_max,
            k_max,
            a_max,
            override_caps,
            json,
            csv,
        } => cmd_verify(
            &id,
            RangeParams {
                n_max,
                sum_max,
                k_max,
                a_max,
                override_caps,
            },
            json,
            csv,
        ),
        Command::Survey {
            stdin,
            file,
            enumerate_max,
            random,
            order_max,
            seed,
            json,
            csv,
        } => cmd_survey(
            stdin,
            file,
            enumerate_max,
            random,
            order_max,
            seed,
            json,
            csv,
        ),
    }
}

/// Runs one parameter on one graph, consulting the cache when enabled.
fn solve_with_cache(
    g: &Graph,
    param: Param,
    cache: Option<&Cache>,
    recheck: bool,
) -> Result<ResultOut, CliError> {
    let (name, solve): (&str, fn(&Graph) -> SolveResult) = match param {
        Param::Gamma => ("gamma", min_dominating),
        Param::GammaS => ("gamma_s", min_secure_dominating),
        Param::Both => unreachable!("expanded by the caller"),
    };
    let key = graph_key(g);

    let mut cached = false;
    let (value, witness, wall_ms) = match cache.map(|c| c.lookup(&key, name)).transpose()?.flatten()
    {
        Some(record) => {
            let hit_witness: VertexSet = record.witness.iter().copied().collect();
            if recheck {
                let fresh = solve(g);
                if fresh.value != record.value || fresh.witness != hit_witness {
                    return Err(CliError::verification(format!(
                        "cache record for key {key} parameter {name} disagrees with \
                         recomputation: cached value {} witness {:?}, fresh value {} witness {}",
                        record.value, record.witness, fresh.value, fresh.witness
                    )));
                }
            }
            cached = true;
            (record.value, hit_witness, 0)
        }
        None => {
            let started = Instant::now();
            let result = solve(g);
            let wall_ms = started.elapsed().as_millis() as u64;
            if let Some(cache) = cache {
                cache.append(&RunRecord {
                    key,
                    parameter: name.into(),
                    value: result.value,
                    witness: result.witness.iter().collect(),
                    version: env!("CARGO_PKG_VERSION").into(),
                    wall_ms,
                })?;
            }
            (result.value, result.witness, wall_ms)
        }
    };

    let defenders = match param {
        Param::GammaS => {
            let cert = is_secure_dominating(g, witness)
                .expect("solver witnesses satisfy the secure predicate");
            Some(
                cert.defenders()
                    .iter()
                    .map(|(attacker, defender)| (attacker.to_string(), *defender))
                    .collect::<BTreeMap<String, usize>>(),
            )
        }
        _ => None,
    };

    Ok(ResultOut {
        parameter: name.into(),
        value,
        witness: witness.iter().collect(),
        exhausted_below: true,
        defenders,
        cached,
        wall_ms,
    })
}

fn cmd_compute(
    source: &GraphSource,
    param: Param,
    apply_mycielskian: bool,
    json: bool,
    cache_dir: Option<PathBuf>,
    recheck: bool,
) -> Result<i32, CliError> {
    let cache_dir = cache_dir.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
    let cache = cache_dir.map(|dir| Cache::open(&dir)).transpose()?;

    let params: &[Param] = match param {
        Param::Both => &[Param::Gamma, Param::GammaS],
        Param::Gamma => &[Param::Gamma],
        Param::GammaS => &[Param::GammaS],
    };

    for Instance { name, graph } in source::resolve(source)? {
        let (name, graph) = if apply_mycielskian {
            let (mu, _) = mycielskian(&graph)
                .map_err(|e| CliError::usage(format!("cannot build mu({name}): {e}")))?;
            (format!("mu({name})"), mu)
        } else {
            (name, graph)
        };

        let results = params
            .iter()
            .map(|&p| solve_with_cache(&graph, p, cache.as_ref(), recheck))
            .collect::<Result<Vec<_>, _>>()?;

        let out = ComputeOut {
            instance: name,
            graph6: to_graph6(&graph),
            order: graph.order(),
            size: graph.size(),
            results,
        };
        if json {
            println!(
                "{}",
                serde_json::to_string(&out).expect("reports serialize")
            );
        } else {
            println!(
                "graph {} (order {}, size {})",
                out.instance, out.order, out.size
            );
            for r in &out.results {
                let cached = if r.cached { " (cached)" } else { "" };
                println!("  {} = {}{cached}", r.parameter, r.value);
                println!(
                    "  witness {{{}}}",
                    r.witness
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                if let Some(defenders) = &r.defenders {
                    let mut pairs: Vec<(usize, usize)> = defenders
                        .iter()
                        .map(|(a, d)| (a.parse().expect("attacker keys are indices"), *d))
                        .collect();
                    pairs.sort_unstable();
                    let pairs: Vec<String> =
                        pairs.iter().map(|(a, d)| format!("{a}<-{d}")).collect();
                    println!(
                        "  defenders {}",
                        if pairs.is_empty() {
                            "none needed".into()
                        } else {
                            pairs.join(" ")
                        }
                    );
                }
            }
        }
    }
    Ok(0)
}

fn cmd_mycielskian(source: &GraphSource) -> Result<i32, CliError> {
    for Instance { name, graph } in source::resolve(source)? {
        let (mu, _) = mycielskian(&graph)
            .map_err(|e| CliError::usage(format!("cannot build mu({name}): {e}")))?;
        println!("{}", to_graph6(&mu));
    }
    Ok(0)
}

fn cmd_construct(kind: ConstructCmd) -> Result<i32, CliError> {
    let (label, parameters, built, json) = match kind {
        ConstructCmd::GapPositive { k, json } => (
            "gap-positive",
            BTreeMap::from([("k".to_string(), k)]),
            construct_gap_positive(k),
            json,
        ),
        ConstructCmd::GapNonneg { k, json } => (
            "gap-nonneg",
            BTreeMap::from([("k".to_string(), k)]),
            construct_gap_nonnegative(k),
            json,
        ),
        ConstructCmd::Prescribed { a, b, json } => (
            "prescribed",
            BTreeMap::from([("a".to_string(), a), ("b".to_string(), b)]),
            construct_prescribed(a, b),
            json,
        ),
    };
    let (graph, spec): (Graph, ConstructionSpec) =
        built.map_err(|e| CliError::usage(e.to_string()))?;
    let out = ConstructOut {
        kind: label.into(),
        parameters,
        graph6: to_graph6(&graph),
        order: graph.order(),
        size: graph.size(),
        expected_gamma_s: spec.gamma_s,
        expected_gamma_s_mu: spec.gamma_s_mu,
    };
    if json {
        println!(
            "{}",
            serde_json::to_string(&out).expect("reports serialize")
        );
    } else {
        let params: Vec<String> = out
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!("kind {} {}", out.kind, params.join(" "));
        println!("graph6 {}", out.graph6);
        println!("order {} size {}", out.order, out.size);
        println!(
            "expected gamma_s={} gamma_s_mu={}",
            out.expected_gamma_s, out.expected_gamma_s_mu
        );
    }
    Ok(0)
}

fn cmd_verify(id: &str, params: RangeParams, json: bool, csv: bool) -> Result<i32, CliError> {
    let id: TheoremId = id.parse().map_err(|e: String| CliError::usage(e))?;
    let reports = run_theorem(id, &params).map_err(|e| CliError::usage(e.to_string()))?;

    let fails = reports.iter().filter(|r| r.verdict.is_fail()).count();
    let skips = reports
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Skipped { .. }))
        .count();

    if json {
        let out: Vec<ReportOut> = reports.iter().map(ReportOut::from).collect();
        println!(
            "{}",
            serde_json::to_string(&out).expect("reports serialize")
        );
    } else if csv {
        print!("{}", output::verify_csv(&reports));
    } else {
        println!("theorem {id}: {} instances", reports.len());
        for r in &reports {
            println!(
                "  {:<24} expected {:<32} computed {:<32} {}",
                r.instance, r.expected, r.computed, r.verdict
            );
            if let Some(cx) = &r.counterexample {
                println!("    counterexample: {cx}");
            }
        }
        println!(
            "summary: {} checks, {} pass, {fails} fail, {skips} skipped",
            reports.len(),
            reports.len() - fails - skips
        );
    }
    Ok(if fails == 0 { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_survey(
    stdin: bool,
    file: Option<PathBuf>,
    enumerate_max: Option<usize>,
    random: Option<usize>,
    order_max: usize,
    seed: u64,
    json: bool,
    csv: bool,
) -> Result<i32, CliError> {
    let mut instances: Vec<Graph> = Vec::new();
    if stdin || file.is_some() {
        let source = GraphSource {
            family: None,
            n: None,
            m: None,
            graph6: None,
            file,
            stdin,
        };
        instances.extend(source::resolve(&source)?.into_iter().map(|i| i.graph));
    } else if let Some(count) = random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let n = rng.random_range(1..=order_max.max(1));
            let mut g = Graph::new(n).map_err(|e| CliError::usage(e.to_string()))?;
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v).expect("indices in range");
                    }
                }
            }
            instances.push(g);
        }
    } else {
        let n_max = enumerate_max.unwrap_or(5);
        for n in 1..=n_max {
            let stream = enumerate_graphs(n, true).map_err(|e| CliError::usage(e.to_string()))?;
            instances.extend(stream);
        }
    }

    let rows: Vec<SurveyOut> = instances
        .iter()
        .map(|g| match survey_row(g) {
            Ok(row) => SurveyOut::evaluated(&row),
            Err(reason) => SurveyOut::skipped(to_graph6(g), &reason),
        })
        .collect();
    let fails = rows.iter().filter(|r| r.is_fail()).count();

    if json {
        println!(
            "{}",
            serde_json::to_string(&rows).expect("reports serialize")
        );
    } else if csv {
        print!("{}", output::survey_csv(&rows));
    } else {
        println!(
            "{:<16} {:>5} {:>5} {:>7} {:>8} {:>11}  {:<14} {:<14} {:<12} {:<10} verdict",
            "instance",
            "order",
            "Delta",
            "gamma",
            "gamma_s",
            "gamma_s_mu",
            "fw1",
            "fw2",
            "fw3",
            "fw4"
        );
        for r in &rows {
            let opt = |v: &Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            println!(
                "{:<16} {:>5} {:>5} {:>7} {:>8} {:>11}  {:<14} {:<14} {:<12} {:<10} {}",
                r.instance,
                opt(&r.order),
                opt(&r.max_degree),
                opt(&r.gamma),
                opt(&r.gamma_s),
                opt(&r.gamma_s_mu),
                r.fw1,
                r.fw2,
                r.fw3,
                r.fw4,
                r.verdict
            );
        }
        println!(
            "summary: {} instances, {fails} with counterexamples",
            rows.len()
        );
    }
    Ok(if fails == 0 { 0 } else { 1 })
}
