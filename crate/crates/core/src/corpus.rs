//! Seeded random instance sets shared by tests and the verification harness.

use crate::graph::{random_graph_with, Graph};
use crate::weights::WeightMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub weights: WeightMap,
}

/// `count` graphs `G(n, p)` with `n` uniform in `min_n..=max_n`, `p` cycling through `ps`,
/// and integer weights uniform in `0..=max_weight`.
pub fn weighted_corpus(seed: u64, count: usize, min_n: usize, max_n: usize, ps: &[f64], max_weight: i128) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            let p = ps[i % ps.len()];
            let graph = random_graph_with(n, p, &mut rng);
            let ws: Vec<i128> = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
            Instance {
                name: format!("seed{seed}-#{i}-n{n}-p{p}"),
                graph,
                weights: WeightMap::from_integers(&ws).expect("nonnegative"),
            }
        })
        .collect()
}

/// Unweighted variant of [`weighted_corpus`].
pub fn graph_corpus(seed: u64, count: usize, min_n: usize, max_n: usize, ps: &[f64]) -> Vec<Graph> {
    weighted_corpus(seed, count, min_n, max_n, ps, 0).into_iter().map(|i| i.graph).collect()
}

/// Every graph on `n` labelled vertices, for `n ≤ 5`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 5, "all_graphs is for tiny n");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| Graph::from_edges_lossy(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)))
        .collect()
}

/// Canonical code of a graph with at most 11 vertices: the least upper-triangle adjacency word
/// over all vertex orders compatible with colour refinement.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11, "canonical_code handles at most 11 vertices");
    let colours = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colours[v]);
    for v in order {
        match cells.last_mut() {
            Some(c) if colours[c[0]] == colours[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    place(g, &mut cells, 0, 0, &mut perm, &mut best);
    (n, best)
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn place(g: &Graph, cells: &mut [Vec<usize>], ci: usize, start: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        let n = perm.len();
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | u64::from(g.has_edge(perm[i], perm[j]));
            }
        }
        *best = (*best).min(code);
        return;
    }
    if start == cells[ci].len() {
        return place(g, cells, ci + 1, 0, perm, best);
    }
    for i in start..cells[ci].len() {
        cells[ci].swap(start, i);
        perm.push(cells[ci][start]);
        place(g, cells, ci, start + 1, perm, best);
        perm.pop();
        cells[ci].swap(start, i);
    }
}

/// One graph per isomorphism class on `1..=max_n` vertices with at most `max_m` edges.
pub fn graphs_up_to_isomorphism(max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut layer = vec![Graph::edgeless(1)];
    for n in 2..=max_n + 1 {
        all.extend(layer.iter().cloned());
        if n > max_n {
            break;
        }
        let mut seen = std::collections::BTreeMap::new();
        for h in &layer {
            for mask in 0u32..1 << (n - 1) {
                if h.m() + mask.count_ones() as usize > max_m {
                    continue;
                }
                let mut edges = h.edges().to_vec();
                edges.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
                let g = Graph::from_edges_lossy(n, edges);
                seen.entry(canonical_code(&g)).or_insert(g);
            }
        }
        layer = seen.into_values().collect();
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156
        let gs = graphs_up_to_isomorphism(6, 15);
        let count = |n| gs.iter().filter(|g| g.n() == n).count();
        assert_eq!((1..=6).map(count).collect::<Vec<_>>(), vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn codes_are_invariant() {
        let g = crate::graph::petersen();
        let perm: Vec<usize> = (0..10).map(|v| (v * 3 + 1) % 10).collect();
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
    }
}
