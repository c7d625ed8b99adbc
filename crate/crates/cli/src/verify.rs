//! Invariant suites run by `imtw verify` and by the acceptance tests. Every corpus is
//! regenerated from the seed and a size bound.

use imtw::boundaried::{solve_builtin, BipartiteAlgebra, BoundariedGraph, BuiltinProperty, ForestAlgebra, Label, MaxDegreeAlgebra, TypeAlgebra};
use imtw::corpus::{graph_corpus, graphs_up_to_isomorphism, weighted_corpus};
use imtw::decomp::*;
use imtw::forest_dp::*;
use imtw::graph::*;
use imtw::mis_traces::{enumerate_maximal_independent_sets, mwis_dp, trace_families};
use imtw::oracles::*;
use imtw::packing::*;
use imtw::{Ratio, Result, VertexSet, WeightMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::{Duration, Instant};

pub const SUITES: &[&str] = &[
    "mwis",
    "forest",
    "traces",
    "signatures",
    "skeleton",
    "blob-power",
    "transfers",
    "packing",
    "ptas",
    "structured",
    "anchors",
    "inequalities",
    "smoke",
];

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest corpus graph; suites with costlier oracles clamp it further.
    pub max_n: usize,
    /// Random instances per suite.
    pub count: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, max_n: 10, count: 200 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Tally {
    name: &'static str,
    checks: u64,
    failed: u64,
    failures: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, checks: 0, failed: 0, failures: Vec::new(), start: Instant::now() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }

    fn ok<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name.to_string(),
            passed: self.failed == 0,
            checks: self.checks,
            failure_count: self.failed,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteOutcome> {
    let out = match name {
        "mwis" => mwis(cfg),
        "forest" => forest(cfg),
        "traces" => traces(cfg),
        "signatures" => signatures(cfg),
        "skeleton" => skeleton(cfg),
        "blob-power" => blob_power(cfg),
        "transfers" => transfers(cfg),
        "packing" => packing(cfg),
        "ptas" => ptas(cfg),
        "structured" => structured(cfg),
        "anchors" => anchors(cfg),
        "inequalities" => inequalities(cfg),
        "smoke" => smoke(cfg),
        _ => return None,
    };
    Some(out)
}

fn strategy_for(i: usize) -> Strategy {
    if i % 2 == 0 {
        Strategy::MinFill
    } else {
        Strategy::MinDegree
    }
}

/// `mwis_dp` over heuristic decompositions (k = measured μ) against exhaustive search.
pub fn mwis(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("mwis");
    for (i, inst) in weighted_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.5], 100).iter().enumerate() {
        let g = &inst.graph;
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || inst.name.clone()) else { continue };
        let Some(nice) = t.ok(make_nice(g, &td), || inst.name.clone()) else { continue };
        let Some(dp) = t.ok(mwis_dp(g, &nice, &inst.weights, m.mu), || inst.name.clone()) else { continue };
        let Some((best, _)) = t.ok(brute_mwis(g, &inst.weights), || inst.name.clone()) else { continue };
        t.check(dp.weight == best && g.is_independent(&dp.set), || format!("{}: dp {} brute {best}", inst.name, dp.weight));
    }
    t.finish()
}

/// `mwif_dp` with exhaustive and with bounded families against exhaustive search.
pub fn forest(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("forest");
    for (i, inst) in weighted_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.5], 100).iter().enumerate() {
        let g = &inst.graph;
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || inst.name.clone()) else { continue };
        let Some(nice) = t.ok(make_nice(g, &td), || inst.name.clone()) else { continue };
        let ex = t.ok(mwif_dp(g, &nice, &inst.weights, FamilyProvider::Exhaustive { cap: DEFAULT_EXHAUSTIVE_CAP }), || format!("{} exhaustive", inst.name));
        let pa = t.ok(mwif_dp(g, &nice, &inst.weights, FamilyProvider::Bounded(BoundedOptions::new(m.mu))), || format!("{} bounded", inst.name));
        let Some((best, _)) = t.ok(brute_max_weight_induced_forest(g, &inst.weights), || inst.name.clone()) else { continue };
        if let (Some(ex), Some(pa)) = (ex, pa) {
            t.check(ex.weight == best && pa.weight == best, || format!("{}: exhaustive {} bounded {} brute {best}", inst.name, ex.weight, pa.weight));
        }
    }
    t.finish()
}

/// Every maximal independent set meets every bag in a member of that bag's trace family,
/// and the family has at most `n^(3k)` members.
pub fn traces(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("traces");
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.5]).iter().enumerate() {
        let Some(mis) = t.ok(enumerate_maximal_independent_sets(g), || format!("graph {i}")) else { continue };
        for strategy in [Strategy::MinFill, Strategy::MinDegree] {
            let td = heuristic_decomposition(g, strategy);
            let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
            let Some(nice) = t.ok(make_nice(g, &td), || format!("graph {i}")) else { continue };
            for (name, dec) in [("plain", &td), ("nice", nice.td())] {
                let Some(fams) = t.ok(trace_families(g, dec, m.mu), || format!("graph {i} {name}")) else { continue };
                let bound = (g.n() as f64).powi(3 * m.mu as i32);
                for (node, fam) in fams.iter().enumerate() {
                    t.check(fam.len() as f64 <= bound, || format!("graph {i} {name} node {node}: {} traces above n^3k", fam.len()));
                    for set in &mis {
                        let trace = set.intersection(dec.bag(node));
                        t.check(fam.contains(&trace), || format!("graph {i} {name} node {node}: trace {trace:?} missing"));
                    }
                }
            }
        }
    }
    t.finish()
}

/// Every maximal induced forest has its signature in the bounded family at every node, and the
/// family respects the `(12k)^(12k) n^(14k+2)` bound. Graphs have at most 8 vertices.
pub fn signatures(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("signatures");
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n.min(8), &[0.2, 0.5]).iter().enumerate() {
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
        let Some(nice) = t.ok(make_nice(g, &td), || format!("graph {i}")) else { continue };
        let Some(forests) = t.ok(enumerate_maximal_induced_forests(g), || format!("graph {i}")) else { continue };
        let Some(fams) = t.ok(trace_families(g, nice.td(), m.mu), || format!("graph {i}")) else { continue };
        let vts = nice.td().subtree_vertices();
        let bound = bounded_family_bound(m.mu, g.n());
        for node in 0..nice.len() {
            let fam = signature_family_bounded(g, nice.bag(node), &vts[node], node, &fams[node], BoundedOptions::new(m.mu));
            let Some(fam) = t.ok(fam, || format!("graph {i} node {node}")) else { continue };
            t.check(fam.len() as f64 <= bound, || format!("graph {i} node {node}: {} signatures above the bound", fam.len()));
            for f in &forests {
                let sig = signature_of(g, nice.td(), node, f);
                t.check(fam.contains(&sig), || format!("graph {i} node {node}: signature of {f:?} missing"));
            }
        }
    }
    t.finish()
}

/// The skeleton of a maximal induced forest meets each bag in at most `8μ(𝒯)` vertices.
pub fn skeleton(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("skeleton");
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.5]).iter().enumerate() {
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
        let Some(forests) = t.ok(enumerate_maximal_induced_forests(g), || format!("graph {i}")) else { continue };
        for f in &forests {
            let Some(anat) = t.ok(forest_anatomy(g, f), || format!("graph {i}")) else { continue };
            for (node, bag) in td.bags().iter().enumerate() {
                let hit = anat.skeleton.intersection_len(bag);
                t.check(hit <= 8 * m.mu, || format!("graph {i} node {node}: skeleton meets bag in {hit} > 8*{}", m.mu));
            }
        }
    }
    t.finish()
}

/// Blob graph of radius-`d` balls in `G^k` equals `G^(k+2d)`.
pub fn blob_power(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("blob-power");
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.15, 0.3]).iter().enumerate() {
        for k in 1..=2 {
            let Some(gk) = t.ok(graph_power(g, k), || format!("graph {i}")) else { continue };
            for d in 1..=2 {
                let balls: Vec<VertexSet> = (0..g.n()).map(|v| g.ball(&VertexSet::singleton(v), d)).collect();
                let Some(want) = t.ok(graph_power(g, k + 2 * d), || format!("graph {i}")) else { continue };
                t.check(blob_graph(&gk, &balls) == want, || format!("graph {i} k={k} d={d}: blob graph differs from G^{}", k + 2 * d));
            }
        }
    }
    t.finish()
}

fn random_members(g: &Graph, rng: &mut ChaCha8Rng, max_size: usize, count: usize, min_members: usize) -> Vec<VertexSet> {
    let pool = enumerate_small_connected_subgraphs(g, max_size, &|s| s.len() >= min_members, DEFAULT_SUBGRAPH_CAP).unwrap_or_default();
    if pool.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<VertexSet> = (0..count).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    out.sort();
    out.dedup();
    out
}

/// Width transfers: blob decompositions keep `μ` (and bound `α` by `μ` when members have an
/// edge), odd-power decompositions bound `α` by `μ`.
pub fn transfers(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("transfers");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7472);
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.4]).iter().enumerate() {
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
        for min_size in [1, 2] {
            let members = random_members(g, &mut rng, 4, 10, min_size);
            if members.is_empty() {
                continue;
            }
            let Some(btd) = t.ok(blob_decomposition(g, &td, &members), || format!("graph {i}")) else { continue };
            let blob = blob_graph(g, &members);
            t.check(validate_decomposition(&blob, &btd).is_empty(), || format!("graph {i}: invalid blob decomposition"));
            let Some(bm) = t.ok(decomposition_metrics(&blob, &btd), || format!("graph {i}")) else { continue };
            t.check(bm.mu <= m.mu, || format!("graph {i}: blob mu {} > mu {}", bm.mu, m.mu));
            if min_size == 2 {
                t.check(bm.alpha <= m.mu, || format!("graph {i}: blob alpha {} > mu {}", bm.alpha, m.mu));
            }
        }
        if g.m() == 0 {
            continue;
        }
        for r in [3, 5] {
            let Some(gr) = t.ok(graph_power(g, r), || format!("graph {i}")) else { continue };
            let Some(ptd) = t.ok(odd_power_decomposition(g, &td, r), || format!("graph {i}")) else { continue };
            t.check(validate_decomposition(&gr, &ptd).is_empty(), || format!("graph {i}: invalid power decomposition r={r}"));
            let Some(pm) = t.ok(decomposition_metrics(&gr, &ptd), || format!("graph {i}")) else { continue };
            t.check(pm.alpha <= m.mu, || format!("graph {i} r={r}: alpha {} > mu {}", pm.alpha, m.mu));
        }
    }
    t.finish()
}

fn brute_packing(g: &Graph, fam: &SubgraphFamily, mode: PackingMode) -> i128 {
    let m = fam.len();
    (0u32..1 << m)
        .filter_map(|mask| {
            let chosen: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
            is_valid_packing(g, &fam.members, &chosen, mode).ok()?;
            Some(chosen.iter().map(|&j| fam.weights.get(j)).sum())
        })
        .max()
        .unwrap_or(0)
}

/// Independent and distance-4 packings against all subfamilies (at most 12 members).
pub fn packing(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("packing");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7061);
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n, &[0.2, 0.35]).iter().enumerate() {
        let size = rng.gen_range(1..=12);
        let pool = enumerate_small_connected_subgraphs(g, 3, &|_| true, DEFAULT_SUBGRAPH_CAP).unwrap_or_default();
        // duplicates allowed: the solver must keep the heavier copy
        let members: Vec<VertexSet> = (0..size).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
        let ws: Vec<Ratio> = (0..size).map(|_| Ratio::new(rng.gen_range(0..30), rng.gen_range(1..4)).expect("positive")).collect();
        let Some(wm) = t.ok(WeightMap::from_ratios(&ws), || format!("graph {i}")) else { continue };
        let Some(fam) = t.ok(SubgraphFamily::new(g, (1..=size as i64).collect(), members, wm), || format!("graph {i}")) else { continue };
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
        for d in [2, 4] {
            let Some(sol) = t.ok(max_weight_distance_d_packing(g, &td, &fam, d, m.mu), || format!("graph {i} d={d}")) else { continue };
            let best = brute_packing(g, &fam, PackingMode::Distance(d));
            t.check(sol.weight == best, || format!("graph {i} d={d}: solver {} brute {best}", sol.weight));
        }
    }
    t.finish()
}

/// The approximation scheme for induced forests stays within `(1-ε)` of the optimum.
pub fn ptas(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("ptas");
    for (i, g) in graph_corpus(cfg.seed, cfg.count, 1, cfg.max_n.min(10), &[0.3, 0.5]).iter().enumerate() {
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || format!("graph {i}")) else { continue };
        let Some((opt, _)) = t.ok(brute_max_weight_induced_forest(g, &WeightMap::unit(g.n())), || format!("graph {i}")) else { continue };
        for eps in [Ratio::new(1, 4).expect("valid"), Ratio::new(1, 2).expect("valid")] {
            let Some(sol) = t.ok(ptas_bounded_treewidth_subgraph(g, &td, 1, eps, m.mu), || format!("graph {i} eps={eps}")) else { continue };
            let big_enough = sol.set.len() as i128 * eps.den >= (eps.den - eps.num) * opt;
            t.check(big_enough, || format!("graph {i} eps={eps}: {} vs optimum {opt}", sol.set.len()));
            for comp in g.components_of(&sol.set) {
                t.check(comp.len() <= sol.component_size && g.induces_forest(&comp), || format!("graph {i} eps={eps}: bad component {comp:?}"));
            }
        }
    }
    t.finish()
}

fn algebra_laws<A: TypeAlgebra>(alg: &A, rng: &mut ChaCha8Rng, rounds: usize, t: &mut Tally) {
    let ell = 4;
    for _ in 0..rounds {
        let mut pick = || {
            let n = rng.gen_range(0..=6);
            let p = rng.gen_range(0.1..0.6);
            let b = BoundariedGraph::random(n, p, ell, rng);
            b
        };
        let (a, b, c) = (pick(), pick(), pick());
        let l = rng.gen_range(1..=ell as Label);
        let (ta, tb, tc) = (alg.type_of(&a), alg.type_of(&b), alg.type_of(&c));
        let Some(ab) = t.ok(a.glue(&b), || alg.name()) else { continue };
        t.check(alg.type_of(&ab) == alg.glue(&ta, &tb), || format!("{}: glue not compositional on {a:?} + {b:?}", alg.name()));
        t.check(alg.glue(&ta, &tb) == alg.glue(&tb, &ta), || format!("{}: glue not commutative", alg.name()));
        t.check(alg.glue(&alg.glue(&ta, &tb), &tc) == alg.glue(&ta, &alg.glue(&tb, &tc)), || format!("{}: glue not associative", alg.name()));
        t.check(alg.type_of(&ab.forget_label(l)) == alg.forget(&alg.type_of(&ab), l), || format!("{}: forget {l} not compositional on {ab:?}", alg.name()));
        let g = ab.graph();
        t.check(alg.accepting(&alg.type_of(&ab)) == alg.holds(g, &g.vertices()), || format!("{}: acceptance differs from direct check", alg.name()));
    }
}

/// Structured DP instantiations against exhaustive search, plus the algebra laws.
pub fn structured(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("structured");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6264);
    algebra_laws(&ForestAlgebra, &mut rng, 200, &mut t);
    algebra_laws(&BipartiteAlgebra, &mut rng, 200, &mut t);
    for d in 0..3 {
        algebra_laws(&MaxDegreeAlgebra { d }, &mut rng, 200, &mut t);
    }
    for (i, inst) in weighted_corpus(cfg.seed, cfg.count, 1, cfg.max_n.min(10), &[0.2, 0.5], 100).iter().enumerate() {
        let (g, w) = (&inst.graph, &inst.weights);
        let td = heuristic_decomposition(g, strategy_for(i));
        let Some(m) = t.ok(decomposition_metrics(g, &td), || inst.name.clone()) else { continue };
        let Some(nice) = t.ok(make_nice(g, &td), || inst.name.clone()) else { continue };
        let mut cases: Vec<(BuiltinProperty, usize, Result<(i128, VertexSet)>)> = vec![
            (BuiltinProperty::Forest, 2, brute_max_weight_induced_forest(g, w)),
            (BuiltinProperty::Bipartite, 2, brute_max_weight_induced_bipartite(g, w)),
        ];
        for d in 0..3 {
            cases.push((BuiltinProperty::MaxDegree(d), d + 1, brute_max_weight_bounded_degree(g, w, d)));
        }
        for (prop, r, brute) in cases {
            let Some((best, _)) = t.ok(brute, || inst.name.clone()) else { continue };
            let Some(sol) = t.ok(solve_builtin(g, &nice, w, prop, r, m.alpha), || format!("{} {prop}", inst.name)) else { continue };
            t.check(sol.weight == best, || format!("{} {prop}: dp {} brute {best}", inst.name, sol.weight));
        }
        if let Some(ex) = t.ok(mwif_dp(g, &nice, w, FamilyProvider::Exhaustive { cap: DEFAULT_EXHAUSTIVE_CAP }), || inst.name.clone()) {
            if let Some(sol) = t.ok(solve_builtin(g, &nice, w, BuiltinProperty::Forest, 2, m.alpha), || inst.name.clone()) {
                t.check(sol.weight == ex.weight, || format!("{}: forest algebra {} mwif {}", inst.name, sol.weight, ex.weight));
            }
        }
    }
    t.finish()
}

/// Known values: complete bipartite, chordal, matching join, hypercube, and the
/// recognizer for `tree-μ ≤ 1` against the exact oracle.
pub fn anchors(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("anchors");
    if let Some(e) = t.ok(exact_width_parameters(&complete_bipartite(3, 3)), || "K33".into()) {
        t.check(e.tree_alpha == 3 && e.tree_mu == 1, || format!("K33: tree-alpha {} tree-mu {}", e.tree_alpha, e.tree_mu));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6368);
    for i in 0..cfg.count.min(100) {
        let n = rng.gen_range(1..=cfg.max_n.min(9));
        let g = random_chordal(n, &mut rng);
        t.check(chordality_test(&g).is_chordal(), || format!("chordal #{i}: generator produced a hole"));
        if let Some(e) = t.ok(exact_width_parameters(&g), || format!("chordal #{i}")) {
            t.check(e.tree_alpha == 1, || format!("chordal #{i}: tree-alpha {}", e.tree_alpha));
        }
    }
    if let Some(e) = t.ok(exact_width_parameters(&matching_join(2)), || "matching join".into()) {
        t.check(e.tree_mu >= 2, || format!("matching_join(2): tree-mu {}", e.tree_mu));
    }
    let q4 = hypercube(4);
    let mut decs = vec![heuristic_decomposition(&q4, Strategy::MinFill), heuristic_decomposition(&q4, Strategy::MinDegree), TreeDecomposition::single_bag(&q4)];
    for _ in 0..20 {
        let mut order: Vec<usize> = (0..q4.n()).collect();
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
        decs.push(decomposition_from_ordering(&q4, &order));
    }
    for (i, td) in decs.iter().enumerate() {
        t.check(validate_decomposition(&q4, td).is_empty(), || format!("hypercube decomposition {i} invalid"));
        if let Some(m) = t.ok(decomposition_metrics(&q4, td), || format!("hypercube decomposition {i}")) {
            t.check(m.mu >= 2, || format!("hypercube decomposition {i}: mu {}", m.mu));
        }
    }
    for (i, g) in graphs_up_to_isomorphism(cfg.max_n.min(8), 9).iter().enumerate() {
        if let Some(e) = t.ok(exact_width_parameters(g), || format!("class {i}")) {
            t.check(recognize_imtw_at_most_1(g) == (e.tree_mu <= 1), || format!("class {i} {:?}: recognizer disagrees", g.edges()));
        }
    }
    t.finish()
}

/// Width inequalities on all graphs with at most 8 vertices and 9 edges (up to isomorphism).
pub fn inequalities(cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("inequalities");
    let corpus = graphs_up_to_isomorphism(cfg.max_n.min(8), 9);
    for (i, g) in corpus.iter().enumerate() {
        let ctx = || format!("class {i} {:?}", g.edges());
        let Some(e) = t.ok(exact_width_parameters(g), ctx) else { continue };
        t.check(e.tree_mu <= e.tree_alpha && e.tree_alpha <= e.treewidth + 1, || format!("{}: chain broken", ctx()));
        let (l2, _) = line_graph_square(g);
        if l2.n() > 0 {
            if let Some(el) = t.ok(exact_width_parameters(&l2), ctx) {
                t.check(e.tree_mu == el.tree_alpha, || format!("{}: tree-mu {} vs tree-alpha(L2) {}", ctx(), e.tree_mu, el.tree_alpha));
            }
        } else {
            t.check(e.tree_mu == 0, || format!("{}: edgeless yet tree-mu {}", ctx(), e.tree_mu));
        }
        if g.n() <= 4 {
            if let Some(ec) = t.ok(exact_width_parameters(&corona(g)), ctx) {
                t.check(e.tree_alpha == ec.tree_mu, || format!("{}: tree-alpha {} vs tree-mu(corona) {}", ctx(), e.tree_alpha, ec.tree_mu));
            }
        }
        let mut powers = vec![e.clone()];
        for r in 2..=5 {
            let Some(gr) = t.ok(graph_power(g, r), ctx) else { break };
            let Some(er) = t.ok(exact_width_parameters(&gr), ctx) else { break };
            powers.push(er);
        }
        if powers.len() < 5 {
            continue;
        }
        let w = |r: usize| &powers[r - 1];
        for r in 1..=2 {
            t.check(w(r + 2).tree_alpha <= w(r).tree_alpha && w(r + 2).tree_mu <= w(r).tree_mu, || format!("{}: power {} exceeds power {r}", ctx(), r + 2));
        }
        for r in [3, 5] {
            t.check(w(r).tree_alpha <= e.tree_alpha && w(r).tree_mu <= e.tree_mu, || format!("{}: odd power {r} exceeds G", ctx()));
            if g.m() > 0 {
                t.check(w(r).tree_alpha <= e.tree_mu, || format!("{}: tree-alpha(G^{r}) {} > tree-mu {}", ctx(), w(r).tree_alpha, e.tree_mu));
            }
        }
        if g.m() > 0 {
            let delta = g.max_degree();
            let cap = 2 * e.tree_mu * delta * delta;
            t.check(e.tree_alpha <= cap, || format!("{}: tree-alpha {} > {cap}", ctx(), e.tree_alpha));
            t.check(e.treewidth <= cap * (delta + 1), || format!("{}: treewidth {} > {}", ctx(), e.treewidth, cap * (delta + 1)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6d69);
    let mut done = 0;
    while done < 100 && !corpus.is_empty() {
        let g = &corpus[rng.gen_range(0..corpus.len())];
        if g.n() < 2 {
            continue;
        }
        let contract = g.m() > 0 && rng.gen_bool(0.5);
        let minor = if contract {
            let (u, v) = g.edges()[rng.gen_range(0..g.m())];
            contract_edge(g, u, v).map(|x| x.0)
        } else {
            delete_vertex(g, rng.gen_range(0..g.n())).map(|x| x.0)
        };
        done += 1;
        let Some(h) = t.ok(minor, || format!("minor op {done}")) else { continue };
        if let (Some(eg), Some(eh)) = (t.ok(exact_width_parameters(g), || "minor".into()), t.ok(exact_width_parameters(&h), || "minor".into())) {
            t.check(eh.tree_mu <= eg.tree_mu, || format!("{:?} -> {:?}: tree-mu grew", g.edges(), h.edges()));
        }
    }
    t.finish()
}

pub const SMOKE_MWIS_LIMIT: Duration = Duration::from_secs(5);
pub const SMOKE_FOREST_LIMIT: Duration = Duration::from_secs(300);

/// Timed runs on complete bipartite graphs with a single-bag decomposition.
pub fn smoke(_cfg: &VerifyConfig) -> SuiteOutcome {
    let mut t = Tally::new("smoke");
    let g = complete_bipartite(20, 20);
    let start = Instant::now();
    let sol = make_nice(&g, &TreeDecomposition::single_bag(&g)).and_then(|nice| mwis_dp(&g, &nice, &WeightMap::unit(40), 1));
    let took = start.elapsed();
    if let Some(sol) = t.ok(sol, || "K20,20 mwis".into()) {
        t.check(sol.weight == 20, || format!("K20,20 mwis weight {}", sol.weight));
        t.check(took < SMOKE_MWIS_LIMIT, || format!("K20,20 mwis took {took:?}"));
    }
    let g = complete_bipartite(8, 8);
    let start = Instant::now();
    let sol = make_nice(&g, &TreeDecomposition::single_bag(&g)).and_then(|nice| mwif_dp(&g, &nice, &WeightMap::unit(16), FamilyProvider::Bounded(BoundedOptions::new(1))));
    let took = start.elapsed();
    if let Some(sol) = t.ok(sol, || "K8,8 mwif".into()) {
        t.check(sol.weight == 9, || format!("K8,8 mwif weight {}", sol.weight));
        t.check(took < SMOKE_FOREST_LIMIT, || format!("K8,8 mwif took {took:?}"));
    }
    t.finish()
}
