//! Argument grammar and command dispatch.

use crate::report::{digest, RunReport, EXIT_INPUT, EXIT_INVARIANT, EXIT_OK};
use crate::verify::{self, VerifyConfig, SUITES};
use clap::{Args, Parser, Subcommand};
use imtw::boundaried::{clique_number_at_most, solve_builtin, BuiltinProperty};
use imtw::decomp::*;
use imtw::forest_dp::{mwif_dp, FamilyProvider, BoundedOptions, DEFAULT_EXHAUSTIVE_CAP};
use imtw::graph::*;
use imtw::mis_traces::mwis_dp;
use imtw::oracles::*;
use imtw::packing::*;
use imtw::{Error, Graph, Ratio, Result, VertexSet, WeightMap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Largest instance on which solver answers are also compared with exhaustive search.
const ORACLE_LIMIT: usize = 18;
const PACKING_ORACLE_LIMIT: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "imtw", version, about = "Algorithms for graphs of bounded induced matching treewidth")]
pub struct Cli {
    /// Threads for parallel sections (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Reports are always JSON; accepted for scripts that pass it.
    #[arg(long, global = true)]
    json: bool,
    /// Write the produced graph or decomposition here instead of embedding it in the report.
    #[arg(short = 'o', global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph: path N | cycle N | complete N | complete-bipartite A B | hypercube D |
    /// petersen | matching-join N | random N P | tree N | chordal N
    Gen { family: String, params: Vec<String> },
    /// Heuristic tree decomposition.
    Decompose {
        graph: PathBuf,
        #[arg(long, default_value = "min-fill")]
        strategy: Strategy,
    },
    /// α(𝒯) and μ(𝒯) of a decomposition.
    Metrics { graph: PathBuf, td: PathBuf },
    /// Exact tree-α, tree-μ and treewidth of a small graph.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WIDTH_CAP)]
        cap: usize,
    },
    /// Optimization problems over a graph and a tree decomposition.
    #[command(subcommand)]
    Solve(Solve),
    /// Graph constructions; the result graph is written with -o or embedded in the report.
    #[command(subcommand)]
    Transform(Transform),
    /// Decide whether tree-μ is at most 1.
    #[command(name = "recognize-imtw1")]
    RecognizeImtw1 { graph: PathBuf },
    /// Run invariant suites on regenerated corpora.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Timed runs on complete bipartite graphs.
    Bench,
}

#[derive(Args, Debug)]
struct Instance {
    graph: PathBuf,
    /// Tree decomposition; a heuristic one is computed when absent.
    td: Option<PathBuf>,
    #[arg(short = 'w')]
    weights: Option<PathBuf>,
    /// Width bound in force; defaults to the measured value of the decomposition.
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(long, default_value = "min-fill")]
    strategy: Strategy,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum FamilyChoice {
    /// Bounded guessing family (the default).
    #[value(name = "paper")]
    Bounded,
    Exhaustive,
}

#[derive(Subcommand, Debug)]
enum Solve {
    /// Maximum weight independent set.
    Mwis(Instance),
    /// Maximum weight induced forest.
    Forest {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value = "paper")]
        family: FamilyChoice,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Maximum weight independent packing of a subgraph family.
    Pack {
        #[command(flatten)]
        inst: Instance,
        #[arg(short = 'H', long = "subgraphs")]
        subgraphs: PathBuf,
    },
    /// Maximum weight distance-d packing (even d).
    Dpack {
        #[command(flatten)]
        inst: Instance,
        #[arg(short = 'H', long = "subgraphs")]
        subgraphs: PathBuf,
        #[arg(short = 'd')]
        d: usize,
    },
    /// Large induced subgraph of treewidth at most r, within (1-ε) of optimal.
    Ptas {
        #[command(flatten)]
        inst: Instance,
        #[arg(short = 'r', default_value_t = 1)]
        r: usize,
        #[arg(long)]
        eps: Ratio,
    },
    /// Maximum weight induced subgraph with a property and clique number at most r.
    Generic {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        property: BuiltinProperty,
        #[arg(short = 'r', default_value_t = 2)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Transform {
    /// G^k: vertices at distance at most k become adjacent.
    Power {
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
    },
    /// One pendant vertex per vertex.
    Corona { graph: PathBuf },
    /// Square of the line graph.
    L2 { graph: PathBuf },
    /// Blob graph of a subgraph family.
    Blob {
        graph: PathBuf,
        #[arg(short = 'H', long = "subgraphs")]
        subgraphs: PathBuf,
    },
    /// Three pendants per vertex and a two-edge path per marked vertex.
    Forked {
        graph: PathBuf,
        /// Comma-separated 1-based marked vertices.
        #[arg(long, default_value = "")]
        marked: String,
    },
}

/// Runs one invocation; returns the exit code and what belongs on stdout.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> (i32, String) {
    let argv: Vec<String> = argv.into_iter().collect();
    let mut report = RunReport::new(argv.iter().skip(1).cloned().collect());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                return (EXIT_OK, e.to_string());
            }
            report.fail(&Error::input(e.to_string().trim_end().to_string()));
            return (EXIT_INPUT, report.to_json());
        }
    };
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers.max(1)).build();
    let outcome = match pool {
        Ok(pool) => pool.install(|| dispatch(&cli, &mut report)),
        Err(e) => Err(Error::input(format!("cannot start {} workers: {e}", cli.workers))),
    };
    match outcome {
        Ok(Outcome { result, verification, artifact, code }) => {
            if let Some(text) = artifact {
                match &cli.output {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, text) {
                            report.fail(&Error::input(format!("cannot write {}: {e}", path.display())));
                        }
                    }
                    None => report.result = Some(json!({ "artifact": text })),
                }
            }
            if let Some(r) = result {
                match report.result.take() {
                    Some(Value::Object(extra)) => {
                        let mut merged = r;
                        if let Value::Object(m) = &mut merged {
                            m.extend(extra);
                        }
                        report.result = Some(merged);
                    }
                    _ => report.result = Some(r),
                }
            }
            report.verification = verification;
            if report.error.is_none() && code != EXIT_OK {
                report.status = "invariant_violation";
                report.exit_code = code;
            }
        }
        Err(e) => report.fail(&e),
    }
    if cli.timing || matches!(cli.command, Command::Bench) {
        report.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    (report.exit_code, report.to_json())
}

struct Outcome {
    result: Option<Value>,
    verification: Option<Value>,
    artifact: Option<String>,
    code: i32,
}

impl Outcome {
    fn result(result: Value) -> Self {
        Outcome { result: Some(result), verification: None, artifact: None, code: EXIT_OK }
    }

    fn checked(result: Value, verification: Value) -> Self {
        let ok = verification.get("passed").and_then(Value::as_bool).unwrap_or(true);
        Outcome { result: Some(result), verification: Some(verification), artifact: None, code: if ok { EXIT_OK } else { EXIT_INVARIANT } }
    }

    fn artifact(result: Value, text: String) -> Self {
        Outcome { result: Some(result), verification: None, artifact: Some(text), code: EXIT_OK }
    }
}

fn read(path: &Path, report: &mut RunReport) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    report.inputs.push(digest(path, &bytes));
    String::from_utf8(bytes).map_err(|_| Error::input(format!("{} is not UTF-8", path.display())))
}

fn load_graph(path: &Path, report: &mut RunReport) -> Result<Graph> {
    parse_graph(&read(path, report)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Input { line, message } => Error::Input { line, message: format!("{}: {message}", path.display()) },
        other => other,
    }
}

fn one_based(s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn ordering(o: &[usize]) -> Vec<usize> {
    o.iter().map(|v| v + 1).collect()
}

struct Loaded {
    g: Graph,
    td: TreeDecomposition,
    w: WeightMap,
    metrics: DecompositionMetrics,
}

fn load_instance(inst: &Instance, report: &mut RunReport) -> Result<Loaded> {
    let g = load_graph(&inst.graph, report)?;
    let td = match &inst.td {
        Some(p) => parse_td(&read(p, report)?).map_err(|e| in_file(p, e))?,
        None => heuristic_decomposition(&g, inst.strategy),
    };
    let violations = validate_decomposition(&g, &td);
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Error::input(format!("invalid tree decomposition: {}", list.join("; "))));
    }
    let w = match &inst.weights {
        Some(p) => parse_weights(&read(p, report)?, g.n()).map_err(|e| in_file(p, e))?,
        None => WeightMap::unit(g.n()),
    };
    let metrics = decomposition_metrics(&g, &td)?;
    Ok(Loaded { g, td, w, metrics })
}

fn bound_in_force(given: Option<usize>, measured: usize, what: &str) -> Result<usize> {
    match given {
        Some(k) if k < measured => Err(Error::input(format!("-k {k} is below the measured {what} {measured} of the decomposition"))),
        Some(k) => Ok(k),
        None => Ok(measured),
    }
}

fn dispatch(cli: &Cli, report: &mut RunReport) -> Result<Outcome> {
    match &cli.command {
        Command::Gen { family, params } => gen(family, params, cli.seed),
        Command::Decompose { graph, strategy } => {
            let g = load_graph(graph, report)?;
            let td = heuristic_decomposition(&g, *strategy);
            let m = decomposition_metrics(&g, &td)?;
            let result = json!({ "bags": td.len(), "max_bag_size": td.max_bag_size(), "alpha": m.alpha, "mu": m.mu });
            Ok(Outcome::artifact(result, write_td(&td, g.n())))
        }
        Command::Metrics { graph, td } => {
            let g = load_graph(graph, report)?;
            let td = parse_td(&read(td, report)?).map_err(|e| in_file(td, e))?;
            let violations = validate_decomposition(&g, &td);
            if !violations.is_empty() {
                return Ok(Outcome::result(json!({ "valid": false, "violations": violations })));
            }
            let m = decomposition_metrics(&g, &td)?;
            Ok(Outcome::result(json!({
                "valid": true,
                "alpha": m.alpha,
                "alpha_bag": m.alpha_node + 1,
                "alpha_witness": one_based(&m.alpha_witness),
                "mu": m.mu,
                "mu_bag": m.mu_node + 1,
                "mu_witness": m.mu_witness.iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
            })))
        }
        Command::Exact { graph, cap } => {
            let g = load_graph(graph, report)?;
            let e = exact_width_parameters_capped(&g, *cap)?;
            Ok(Outcome::result(json!({
                "tree_alpha": e.tree_alpha,
                "tree_mu": e.tree_mu,
                "treewidth": e.treewidth,
                "witness_ordering": {
                    "tree_alpha": ordering(&e.alpha_ordering),
                    "tree_mu": ordering(&e.mu_ordering),
                    "treewidth": ordering(&e.treewidth_ordering),
                },
            })))
        }
        Command::Solve(s) => solve(s, report),
        Command::Transform(t) => transform(t, report),
        Command::RecognizeImtw1 { graph } => {
            let g = load_graph(graph, report)?;
            let (l2, edges) = line_graph_square(&g);
            let witness = match chordality_test(&l2) {
                Chordality::Chordal(_) => Value::Null,
                // a hole in L²(G), as edges of G
                Chordality::Hole(c) => json!(c.iter().map(|&i| [edges[i].0 + 1, edges[i].1 + 1]).collect::<Vec<_>>()),
            };
            Ok(Outcome::result(json!({ "imtw_at_most_1": witness.is_null(), "hole_in_line_graph_square": witness })))
        }
        Command::Verify { suite, max_n, count } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { suite.split(',').collect() };
            let cfg = VerifyConfig { seed: cli.seed, max_n: *max_n, count: *count };
            let mut rows = Vec::new();
            for name in names {
                let out = verify::run_suite(name, &cfg).ok_or_else(|| Error::input(format!("unknown suite {name:?}; known: {}", SUITES.join(", "))))?;
                let mut row = serde_json::to_value(&out).expect("serializable");
                if cli.timing {
                    row["elapsed_ms"] = json!(out.elapsed.as_secs_f64() * 1e3);
                }
                rows.push(row);
            }
            let passed = rows.iter().all(|r| r["passed"] == json!(true));
            Ok(Outcome::checked(json!({ "seed": cli.seed, "max_n": max_n, "count": count }), json!({ "passed": passed, "suites": rows })))
        }
        Command::Bench => {
            let out = verify::smoke(&VerifyConfig::default());
            let ok = out.passed;
            let row = json!({ "suite": out, "elapsed_ms": out.elapsed.as_secs_f64() * 1e3 });
            Ok(Outcome::checked(row, json!({ "passed": ok })))
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params.get(i).ok_or_else(|| Error::input(format!("missing parameter {what}")))?;
    raw.parse().map_err(|_| Error::input(format!("bad {what} {raw:?}")))
}

fn gen(family: &str, params: &[String], seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match family {
        "path" => path(param(params, 0, "n")?),
        "cycle" => cycle(param(params, 0, "n")?),
        "complete" => complete(param(params, 0, "n")?),
        "complete-bipartite" => complete_bipartite(param(params, 0, "a")?, param(params, 1, "b")?),
        "hypercube" => hypercube(param(params, 0, "dimension")?),
        "petersen" => petersen(),
        "matching-join" => matching_join(param(params, 0, "n")?),
        "random" => {
            let p: f64 = param(params, 1, "p")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
            }
            random_graph_with(param(params, 0, "n")?, p, &mut rng)
        }
        "tree" => random_tree(param(params, 0, "n")?, &mut rng),
        "chordal" => random_chordal(param(params, 0, "n")?, &mut rng),
        other => return Err(Error::input(format!("unknown graph family {other:?}"))),
    };
    Ok(Outcome::artifact(json!({ "n": g.n(), "m": g.m() }), write_graph(&g)))
}

fn solve(s: &Solve, report: &mut RunReport) -> Result<Outcome> {
    match s {
        Solve::Mwis(inst) => {
            let l = load_instance(inst, report)?;
            let k = bound_in_force(inst.k, l.metrics.mu, "mu")?;
            let nice = make_nice(&l.g, &l.td)?;
            let sol = mwis_dp(&l.g, &nice, &l.w, k)?;
            let oracle = (l.g.n() <= ORACLE_LIMIT).then(|| brute_mwis(&l.g, &l.w)).transpose()?.map(|x| x.0);
            let independent = l.g.is_independent(&sol.set);
            let passed = independent && l.w.of(&sol.set) == sol.weight && oracle.is_none_or(|o| o == sol.weight);
            Ok(Outcome::checked(
                json!({
                    "optimum": l.w.to_ratio(sol.weight).to_string(),
                    "solution": one_based(&sol.set),
                    "k": k,
                    "measured_mu": l.metrics.mu,
                    "family_sizes": sol.family_sizes,
                    "table_sizes": sol.table_sizes,
                }),
                json!({ "passed": passed, "independent": independent, "oracle_optimum": oracle.map(|o| l.w.to_ratio(o).to_string()) }),
            ))
        }
        Solve::Forest { inst, family, budget } => {
            let l = load_instance(inst, report)?;
            let k = bound_in_force(inst.k, l.metrics.mu, "mu")?;
            let nice = make_nice(&l.g, &l.td)?;
            let provider = match family {
                FamilyChoice::Bounded => {
                    let mut opts = BoundedOptions::new(k);
                    if let Some(b) = budget {
                        opts.budget = *b;
                    }
                    FamilyProvider::Bounded(opts)
                }
                FamilyChoice::Exhaustive => FamilyProvider::Exhaustive { cap: DEFAULT_EXHAUSTIVE_CAP },
            };
            let sol = mwif_dp(&l.g, &nice, &l.w, provider)?;
            let oracle = (l.g.n() <= ORACLE_LIMIT).then(|| brute_max_weight_induced_forest(&l.g, &l.w)).transpose()?.map(|x| x.0);
            let forest = l.g.induces_forest(&sol.set);
            let passed = forest && l.w.of(&sol.set) == sol.weight && oracle.is_none_or(|o| o == sol.weight);
            Ok(Outcome::checked(
                json!({
                    "optimum": l.w.to_ratio(sol.weight).to_string(),
                    "solution": one_based(&sol.set),
                    "k": k,
                    "measured_mu": l.metrics.mu,
                    "family_sizes": sol.family_sizes,
                    "table_sizes": sol.table_sizes,
                }),
                json!({ "passed": passed, "induces_forest": forest, "oracle_optimum": oracle.map(|o| l.w.to_ratio(o).to_string()) }),
            ))
        }
        Solve::Pack { inst, subgraphs } => packing_command(inst, subgraphs, 2, report),
        Solve::Dpack { inst, subgraphs, d } => packing_command(inst, subgraphs, *d, report),
        Solve::Ptas { inst, r, eps } => {
            let l = load_instance(inst, report)?;
            let k = bound_in_force(inst.k, l.metrics.mu, "mu")?;
            let sol = ptas_bounded_treewidth_subgraph(&l.g, &l.td, *r, *eps, k)?;
            let comps = l.g.components_of(&sol.set);
            let mut passed = true;
            for c in &comps {
                passed &= c.len() <= sol.component_size && has_treewidth_at_most(&l.g, c, *r)?;
            }
            Ok(Outcome::checked(
                json!({
                    "size": sol.set.len(),
                    "solution": one_based(&sol.set),
                    "component_size": sol.component_size,
                    "family_size": sol.family_size,
                    "k": k,
                }),
                json!({ "passed": passed, "components": comps.len() }),
            ))
        }
        Solve::Generic { inst, property, r } => {
            let l = load_instance(inst, report)?;
            let k = bound_in_force(inst.k, l.metrics.alpha, "alpha")?;
            let nice = make_nice(&l.g, &l.td)?;
            let sol = solve_builtin(&l.g, &nice, &l.w, *property, *r, k)?;
            let holds = match property {
                BuiltinProperty::Forest => l.g.induces_forest(&sol.set),
                BuiltinProperty::Bipartite => is_bipartite_set(&l.g, &sol.set),
                BuiltinProperty::MaxDegree(d) => sol.set.iter().all(|v| l.g.nbr_set(v).intersection_len(&sol.set) <= *d),
            };
            let cliques = clique_number_at_most(&l.g, &sol.set, *r);
            Ok(Outcome::checked(
                json!({
                    "optimum": l.w.to_ratio(sol.weight).to_string(),
                    "solution": one_based(&sol.set),
                    "property": property.to_string(),
                    "r": r,
                    "k": k,
                    "boundary_size": sol.ell,
                    "table_sizes": sol.table_sizes,
                }),
                json!({ "passed": holds && cliques, "property_holds": holds, "clique_bound_holds": cliques }),
            ))
        }
    }
}

fn packing_command(inst: &Instance, subgraphs: &Path, d: usize, report: &mut RunReport) -> Result<Outcome> {
    let l = load_instance(inst, report)?;
    let k = bound_in_force(inst.k, l.metrics.mu, "mu")?;
    let fam = parse_family_json(&read(subgraphs, report)?, &l.g).map_err(|e| in_file(subgraphs, e))?;
    let sol = max_weight_distance_d_packing(&l.g, &l.td, &fam, d, k)?;
    let mode = if d == 2 { PackingMode::Independent } else { PackingMode::Distance(d) };
    let valid = is_valid_packing(&l.g, &fam.members, &sol.chosen, mode).is_ok();
    let oracle = (fam.len() <= PACKING_ORACLE_LIMIT).then(|| {
        (0u32..1 << fam.len())
            .filter_map(|mask| {
                let chosen: Vec<usize> = (0..fam.len()).filter(|&j| mask >> j & 1 == 1).collect();
                is_valid_packing(&l.g, &fam.members, &chosen, mode).ok()?;
                Some(chosen.iter().map(|&j| fam.weights.get(j)).sum::<i128>())
            })
            .max()
            .unwrap_or(0)
    });
    let passed = valid && oracle.is_none_or(|o| o == sol.weight);
    Ok(Outcome::checked(
        json!({
            "optimum": fam.weights.to_ratio(sol.weight).to_string(),
            "chosen_ids": sol.chosen.iter().map(|&j| fam.ids[j]).collect::<Vec<_>>(),
            "d": d,
            "k": k,
            "blob_vertices": sol.blob_vertices,
            "blob_edges": sol.blob_edges,
            "duplicate_free": fam.is_duplicate_free(),
        }),
        json!({ "passed": passed, "valid_packing": valid, "oracle_optimum": oracle.map(|o| fam.weights.to_ratio(o).to_string()) }),
    ))
}

fn transform(t: &Transform, report: &mut RunReport) -> Result<Outcome> {
    let emit = |g: &Graph, extra: Value| {
        let mut result = json!({ "n": g.n(), "m": g.m() });
        if let (Value::Object(r), Value::Object(x)) = (&mut result, extra) {
            r.extend(x);
        }
        Ok(Outcome::artifact(result, write_graph(g)))
    };
    match t {
        Transform::Power { graph, k } => emit(&graph_power(&load_graph(graph, report)?, *k)?, json!({})),
        Transform::Corona { graph } => emit(&corona(&load_graph(graph, report)?), json!({})),
        Transform::L2 { graph } => {
            let (l2, edges) = line_graph_square(&load_graph(graph, report)?);
            emit(&l2, json!({ "vertex_edges": edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>() }))
        }
        Transform::Blob { graph, subgraphs } => {
            let g = load_graph(graph, report)?;
            let fam = parse_family_json(&read(subgraphs, report)?, &g).map_err(|e| in_file(subgraphs, e))?;
            emit(&blob_graph(&g, &fam.members), json!({ "vertex_ids": fam.ids }))
        }
        Transform::Forked { graph, marked } => {
            let g = load_graph(graph, report)?;
            let mut m = VertexSet::new();
            for tok in marked.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let v: usize = tok.parse().map_err(|_| Error::input(format!("bad marked vertex {tok:?}")))?;
                if v == 0 || v > g.n() {
                    return Err(Error::input(format!("marked vertex {v} out of range")));
                }
                m.insert(v - 1);
            }
            let (f, roles) = forked_version(&g, &m)?;
            let roles: Vec<String> = roles
                .iter()
                .map(|r| match r {
                    ForkRole::Original => "original".to_string(),
                    ForkRole::Pendant(v) => format!("pendant:{}", v + 1),
                    ForkRole::PathMiddle(v) => format!("path-middle:{}", v + 1),
                    ForkRole::PathEnd(v) => format!("path-end:{}", v + 1),
                })
                .collect();
            emit(&f, json!({ "roles": roles }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_flags_are_input_errors() {
        let (code, out) = run(["imtw", "solve", "mwis"].map(String::from));
        assert_eq!(code, EXIT_INPUT);
        assert!(out.contains("\"input_error\""));
    }

    #[test]
    fn gen_embeds_the_graph() {
        let (code, out) = run(["imtw", "gen", "cycle", "5"].map(String::from));
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["m"], 5);
        assert!(v["result"]["artifact"].as_str().unwrap().starts_with("p edge 5 5"));
    }
}
