//! Exact maximum weight independent set by branch and bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

struct Search<'a, W: Fn(usize) -> i128> {
    g: &'a Graph,
    w: W,
    cap: u64,
    nodes: u64,
    best: i128,
    best_set: VertexSet,
}

impl<W: Fn(usize) -> i128> Search<'_, W> {
    /// Sum over a greedy clique cover of the heaviest vertex per clique.
    fn bound(&self, cand: &VertexSet) -> i128 {
        let mut cliques: Vec<(VertexSet, i128)> = Vec::new();
        for v in cand {
            match cliques.iter_mut().find(|(c, _)| c.is_subset(self.g.nbr_set(v))) {
                Some((c, top)) => {
                    c.insert(v);
                    *top = (*top).max((self.w)(v));
                }
                None => cliques.push((VertexSet::singleton(v), (self.w)(v))),
            }
        }
        cliques.iter().map(|(_, t)| t).sum()
    }

    fn go(&mut self, mut cand: VertexSet, mut cur: i128, mut chosen: VertexSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::resource("independent set search nodes", self.cap, self.nodes));
        }
        // isolated candidates are always taken
        let isolated: VertexSet = cand.iter().filter(|&v| !self.g.nbr_set(v).intersects(&cand)).collect();
        cur += isolated.iter().map(&self.w).sum::<i128>();
        chosen.union_with(&isolated);
        cand.difference_with(&isolated);
        if cand.is_empty() {
            if cur > self.best {
                self.best = cur;
                self.best_set = chosen;
            }
            return Ok(());
        }
        if cur + self.bound(&cand) <= self.best {
            return Ok(());
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.nbr_set(v).intersection_len(&cand), std::cmp::Reverse(v)))
            .unwrap();
        let mut with = chosen.clone();
        with.insert(v);
        let mut rest = cand.difference(self.g.nbr_set(v));
        rest.remove(v);
        self.go(rest, cur + (self.w)(v), with)?;
        cand.remove(v);
        self.go(cand, cur, chosen)
    }
}

/// Heaviest independent subset of `cand`; ties resolve to the first set found.
pub fn max_weight_independent_set(
    g: &Graph,
    cand: &VertexSet,
    w: impl Fn(usize) -> i128,
    cap: u64,
) -> Result<(i128, VertexSet)> {
    let mut s = Search { g, w, cap, nodes: 0, best: -1, best_set: VertexSet::new() };
    s.go(cand.clone(), 0, VertexSet::new())?;
    Ok((s.best, s.best_set))
}

/// `α(G[cand])` with a witness.
pub fn max_independent_set(g: &Graph, cand: &VertexSet, cap: u64) -> Result<VertexSet> {
    Ok(max_weight_independent_set(g, cand, |_| 1, cap)?.1)
}

/// Largest induced matching among the edges with an endpoint in `x`.
///
/// Solved as a maximum independent set over the touching edges with the
/// `L²` adjacency (two edges conflict when their endpoints induce a connected graph).
pub fn max_induced_matching_touching(g: &Graph, x: &VertexSet, cap: u64) -> Result<Vec<(usize, usize)>> {
    let es: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| x.contains(u) || x.contains(v)).collect();
    let near: Vec<VertexSet> =
        es.iter().map(|&(u, v)| g.closed_neighborhood(&[u, v].into_iter().collect())).collect();
    let mut conflicts = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if near[i].contains(es[j].0) || near[i].contains(es[j].1) {
                conflicts.push((i, j));
            }
        }
    }
    let h = Graph::from_edges_lossy(es.len(), conflicts);
    let pick = max_independent_set(&h, &h.vertices(), cap)?;
    Ok(pick.iter().map(|i| es[i]).collect())
}

pub fn is_induced_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
    let ends: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
    ends.len() == 2 * m.len()
        && m.iter().all(|&(u, v)| g.has_edge(u, v))
        && g.edges_within(&ends) == m.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn small_values() {
        let c5 = cycle(5);
        assert_eq!(max_independent_set(&c5, &c5.vertices(), DEFAULT_NODE_CAP).unwrap().len(), 2);
        let k = complete_bipartite(3, 3);
        assert_eq!(max_independent_set(&k, &k.vertices(), DEFAULT_NODE_CAP).unwrap().len(), 3);
        assert_eq!(max_induced_matching_touching(&k, &k.vertices(), DEFAULT_NODE_CAP).unwrap().len(), 1);
        let star = complete_bipartite(1, 4);
        assert_eq!(max_induced_matching_touching(&star, &VertexSet::singleton(0), 100).unwrap().len(), 1);
        assert!(max_induced_matching_touching(&star, &VertexSet::new(), 100).unwrap().is_empty());
        let c6 = cycle(6);
        let m = max_induced_matching_touching(&c6, &c6.vertices(), 100).unwrap();
        assert_eq!(m.len(), 2);
        assert!(is_induced_matching(&c6, &m));
    }

    #[test]
    fn cap_is_enforced() {
        let g = random_graph(40, 0.2, 1);
        assert!(matches!(max_independent_set(&g, &g.vertices(), 5), Err(Error::Resource { .. })));
    }

    #[test]
    fn weighted_matches_exhaustive() {
        for seed in 0..30 {
            let g = random_graph(11, 0.3, seed);
            let w: Vec<i128> = (0..11).map(|v| ((v * 7 + seed as usize * 3) % 10) as i128).collect();
            let (best, set) = max_weight_independent_set(&g, &g.vertices(), |v| w[v], DEFAULT_NODE_CAP).unwrap();
            assert!(g.is_independent(&set));
            assert_eq!(set.iter().map(|v| w[v]).sum::<i128>(), best);
            let brute = (0u32..1 << 11)
                .map(|m| (0..11).filter(|i| m >> i & 1 == 1).collect::<VertexSet>())
                .filter(|s| g.is_independent(s))
                .map(|s| s.iter().map(|v| w[v]).sum::<i128>())
                .max()
                .unwrap();
            assert_eq!(best, brute);
        }
    }
}
