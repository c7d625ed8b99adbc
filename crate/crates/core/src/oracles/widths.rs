use super::brute::induced_matching_among;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{max_independent_set, DEFAULT_NODE_CAP};
use crate::vertex_set::VertexSet;
use serde::Serialize;
use std::collections::HashMap;

pub const DEFAULT_WIDTH_CAP: usize = 9;

/// Exact tree-α, tree-μ and treewidth, each with an optimal elimination ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactWidths {
    pub tree_alpha: usize,
    pub tree_mu: usize,
    pub treewidth: usize,
    pub alpha_ordering: Vec<usize>,
    pub mu_ordering: Vec<usize>,
    pub treewidth_ordering: Vec<usize>,
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`: the later neighbors of `v`
/// in the fill graph after eliminating `s`.
fn later_neighbors(g: &Graph, s: &VertexSet, v: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(v);
    let mut stack = vec![v];
    let mut out = VertexSet::new();
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if seen.insert(y) {
                if s.contains(y) {
                    stack.push(y);
                } else {
                    out.insert(y);
                }
            }
        }
    }
    out
}

/// Bags `{v} ∪ Q` of eliminating `order` in sequence.
pub fn elimination_bags(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut done = VertexSet::new();
    order
        .iter()
        .map(|&v| {
            let mut b = later_neighbors(g, &done, v);
            b.insert(v);
            done.insert(v);
            b
        })
        .collect()
}

/// Minimum over orderings of the maximum bag cost, by dynamic programming over
/// the set of already eliminated vertices.
fn best_ordering(g: &Graph, cost: &mut dyn FnMut(&VertexSet) -> Result<usize>) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let full = 1usize << n;
    let mut best = vec![usize::MAX; full];
    let mut choice = vec![usize::MAX; full];
    best[0] = 0;
    for mask in 1..full {
        let s: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        for v in &s {
            let prev = mask & !(1 << v);
            let mut before = s.clone();
            before.remove(v);
            let mut bag = later_neighbors(g, &before, v);
            bag.insert(v);
            let val = best[prev].max(cost(&bag)?);
            if val < best[mask] {
                best[mask] = val;
                choice[mask] = v;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = full - 1;
    while mask != 0 {
        let v = choice[mask];
        order.push(v);
        mask &= !(1 << v);
    }
    order.reverse();
    Ok((best[full - 1], order))
}

pub fn exact_width_parameters(g: &Graph) -> Result<ExactWidths> {
    exact_width_parameters_capped(g, DEFAULT_WIDTH_CAP)
}

pub fn exact_width_parameters_capped(g: &Graph, cap: usize) -> Result<ExactWidths> {
    if g.n() > cap {
        return Err(Error::resource("exact width vertices", cap as u64, g.n() as u64));
    }
    if g.n() == 0 {
        return Ok(ExactWidths {
            tree_alpha: 0,
            tree_mu: 0,
            treewidth: 0,
            alpha_ordering: vec![],
            mu_ordering: vec![],
            treewidth_ordering: vec![],
        });
    }
    let mut alpha_memo: HashMap<VertexSet, usize> = HashMap::new();
    let (tree_alpha, alpha_ordering) = best_ordering(g, &mut |b| {
        if let Some(&a) = alpha_memo.get(b) {
            return Ok(a);
        }
        let a = max_independent_set(g, b, DEFAULT_NODE_CAP)?.len();
        alpha_memo.insert(b.clone(), a);
        Ok(a)
    })?;
    let mut mu_memo: HashMap<VertexSet, usize> = HashMap::new();
    let (tree_mu, mu_ordering) = best_ordering(g, &mut |b| {
        if let Some(&m) = mu_memo.get(b) {
            return Ok(m);
        }
        let es: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| b.contains(u) || b.contains(v)).collect();
        let m = induced_matching_among(g, &es).len();
        mu_memo.insert(b.clone(), m);
        Ok(m)
    })?;
    let (tw, treewidth_ordering) = best_ordering(g, &mut |b| Ok(b.len()))?;
    let out = ExactWidths { tree_alpha, tree_mu, treewidth: tw - 1, alpha_ordering, mu_ordering, treewidth_ordering };
    if !(out.tree_mu <= out.tree_alpha && out.tree_alpha <= out.treewidth + 1) {
        return Err(Error::Invariant(format!("width chain broken: {out:?}")));
    }
    Ok(out)
}
