use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::weights::WeightMap;

pub const MWIS_CAP: usize = 24;
pub const FOREST_CAP: usize = 20;
pub const MAXIMAL_FOREST_CAP: usize = 15;
pub const MATCHING_EDGE_CAP: usize = 28;

fn cap(what: &str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        return Err(Error::resource(what, limit as u64, got as u64));
    }
    Ok(())
}

/// Visits every subset accepted by `keep`, which must be hereditary
/// (closed under removing a vertex), in a fixed include-first order.
fn for_each_hereditary(n: usize, keep: &dyn Fn(&VertexSet, usize) -> bool, visit: &mut dyn FnMut(&VertexSet)) {
    fn go(i: usize, n: usize, cur: &mut VertexSet, keep: &dyn Fn(&VertexSet, usize) -> bool, visit: &mut dyn FnMut(&VertexSet)) {
        if i == n {
            visit(cur);
            return;
        }
        if keep(cur, i) {
            cur.insert(i);
            go(i + 1, n, cur, keep, visit);
            cur.remove(i);
        }
        go(i + 1, n, cur, keep, visit);
    }
    go(0, n, &mut VertexSet::new(), keep, visit);
}

/// Heaviest set satisfying a hereditary property; `extends(S, v)` says whether `S + v` still has it.
pub fn brute_max_weight_hereditary(
    g: &Graph,
    w: &WeightMap,
    extends: &dyn Fn(&VertexSet, usize) -> bool,
) -> (i128, VertexSet) {
    let mut best = (-1, VertexSet::new());
    for_each_hereditary(g.n(), extends, &mut |s| {
        let ws = w.of(s);
        if ws > best.0 {
            best = (ws, s.clone());
        }
    });
    best
}

pub fn brute_mwis(g: &Graph, w: &WeightMap) -> Result<(i128, VertexSet)> {
    cap("brute MWIS vertices", MWIS_CAP, g.n())?;
    Ok(brute_max_weight_hereditary(g, w, &|s, v| !g.nbr_set(v).intersects(s)))
}

fn forest_extends(g: &Graph, s: &VertexSet, v: usize) -> bool {
    // adding v closes a cycle iff two of its neighbors in S share a component of G[S]
    let ns = g.nbr_set(v).intersection(s);
    if ns.len() < 2 {
        return true;
    }
    g.components_of(s).iter().all(|c| c.intersection_len(&ns) <= 1)
}

pub fn brute_max_weight_induced_forest(g: &Graph, w: &WeightMap) -> Result<(i128, VertexSet)> {
    cap("brute forest vertices", FOREST_CAP, g.n())?;
    Ok(brute_max_weight_hereditary(g, w, &|s, v| forest_extends(g, s, v)))
}

fn bipartite_extends(g: &Graph, s: &VertexSet, v: usize) -> bool {
    let mut t = s.clone();
    t.insert(v);
    is_bipartite_set(g, &t)
}

/// Whether `G[S]` has no odd cycle.
pub fn is_bipartite_set(g: &Graph, s: &VertexSet) -> bool {
    let mut side = vec![None::<bool>; g.n()];
    for root in s {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let sx = side[x].unwrap();
            for &y in g.neighbors(x) {
                if !s.contains(y) {
                    continue;
                }
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        stack.push(y);
                    }
                    Some(sy) if sy == sx => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn brute_max_weight_induced_bipartite(g: &Graph, w: &WeightMap) -> Result<(i128, VertexSet)> {
    cap("brute bipartite vertices", FOREST_CAP, g.n())?;
    Ok(brute_max_weight_hereditary(g, w, &|s, v| bipartite_extends(g, s, v)))
}

/// Heaviest set inducing maximum degree at most `d`.
pub fn brute_max_weight_bounded_degree(g: &Graph, w: &WeightMap, d: usize) -> Result<(i128, VertexSet)> {
    cap("brute bounded-degree vertices", FOREST_CAP, g.n())?;
    Ok(brute_max_weight_hereditary(g, w, &|s, v| {
        let ns = g.nbr_set(v).intersection(s);
        ns.len() <= d && ns.iter().all(|u| g.nbr_set(u).intersection_len(s) < d)
    }))
}

/// Inclusion-maximal vertex sets inducing a forest, sorted.
pub fn enumerate_maximal_induced_forests(g: &Graph) -> Result<Vec<VertexSet>> {
    cap("maximal forest enumeration vertices", MAXIMAL_FOREST_CAP, g.n())?;
    let mut out = Vec::new();
    for_each_hereditary(g.n(), &|s, v| forest_extends(g, s, v), &mut |s| {
        if (0..g.n()).all(|v| s.contains(v) || !forest_extends(g, s, v)) {
            out.push(s.clone());
        }
    });
    out.sort();
    Ok(out)
}

/// Largest induced matching among edges with an endpoint in `x`, by plain subset search.
pub fn brute_induced_matching_touching(g: &Graph, x: &VertexSet) -> Result<Vec<(usize, usize)>> {
    let es: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| x.contains(u) || x.contains(v)).collect();
    cap("touching edges", MATCHING_EDGE_CAP, es.len())?;
    Ok(induced_matching_among(g, &es))
}

/// Subset search with a size-based cut; only the width oracle calls it without the edge cap,
/// since dense bags have small induced matchings and the cut keeps the search short.
pub(crate) fn induced_matching_among(g: &Graph, es: &[(usize, usize)]) -> Vec<(usize, usize)> {
    fn go(i: usize, es: &[(usize, usize)], g: &Graph, ends: &mut VertexSet, cur: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
        if cur.len() + (es.len() - i) <= best.len() {
            return;
        }
        if i == es.len() {
            *best = cur.clone();
            return;
        }
        let (u, v) = es[i];
        // u and v must be untouched by, and non-adjacent to, every chosen endpoint
        if !ends.contains(u) && !ends.contains(v) && !g.nbr_set(u).intersects(ends) && !g.nbr_set(v).intersects(ends) {
            ends.insert(u);
            ends.insert(v);
            cur.push((u, v));
            go(i + 1, es, g, ends, cur, best);
            cur.pop();
            ends.remove(u);
            ends.remove(v);
        }
        go(i + 1, es, g, ends, cur, best);
    }
    let mut best = Vec::new();
    go(0, es, g, &mut VertexSet::new(), &mut Vec::new(), &mut best);
    best
}

/// All inclusion-maximal independent sets by subset scan (for cross-checking the enumerator).
pub fn brute_maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    cap("maximal independent set scan vertices", MWIS_CAP, g.n())?;
    let mut out = Vec::new();
    for_each_hereditary(g.n(), &|s, v| !g.nbr_set(v).intersects(s), &mut |s| {
        if g.closed_neighborhood(s).len() == g.n() {
            out.push(s.clone());
        }
    });
    out.sort();
    Ok(out)
}
