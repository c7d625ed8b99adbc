//! Simple undirected graphs over dense vertex ids `0..n`.

mod generators;
mod io;
mod transform;

pub use generators::*;
pub use io::{parse_graph, parse_weights, write_graph, write_weights};
pub use transform::*;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    nbr: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], nbr: vec![VertexSet::new(); n], edges: Vec::new() }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at {u}")));
            }
            if !g.nbr[u].insert(v) {
                return Err(Error::input(format!("duplicate edge ({u}, {v})")));
            }
            g.nbr[v].insert(u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Like `from_edges` but silently drops loops and repeated pairs.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::edgeless(n);
        for (u, v) in edges {
            if u != v {
                g.nbr[u].insert(v);
                g.nbr[v].insert(u);
            }
        }
        g.rebuild_lists();
        g
    }

    fn rebuild_lists(&mut self) {
        self.adj = self.nbr.iter().map(|s| s.to_vec()).collect();
        self.edges = (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn nbr_set(&self, v: usize) -> &VertexSet {
        &self.nbr[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.nbr[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.nbr[v].intersects(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.nbr[v])
        })
    }

    /// Open neighborhood `N(S) = (∪ N(v)) \ S`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out.union_with(&self.nbr[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.nbr[v]);
        }
        out
    }

    /// Number of edges of `G[S]`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.nbr[v].intersection_len(s)).sum::<usize>() / 2
    }

    /// Connected components of `G[S]`, each sorted, ordered by minimum vertex.
    pub fn components_of(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut comps = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next.union_with(&self.nbr[v].intersection(&left));
                }
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(&self.vertices())
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        !s.is_empty() && self.components_of(s).len() == 1
    }

    /// Whether `G[S]` is acyclic.
    pub fn induces_forest(&self, s: &VertexSet) -> bool {
        self.edges_within(s) + self.components_of(s).len() == s.len()
    }

    /// Some cycle of `G[S]` as a vertex sequence, if one exists.
    pub fn find_cycle_in(&self, s: &VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = VertexSet::new();
        for root in s {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut stack = vec![root];
            parent[root] = root;
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !s.contains(u) || u == parent[v] {
                        continue;
                    }
                    if seen.contains(u) {
                        // u and v are both in the DFS forest; join their root paths
                        let path_to_root = |mut x: usize| {
                            let mut p = vec![x];
                            while parent[x] != x {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        let pv = path_to_root(v);
                        let pu = path_to_root(u);
                        let on_pu: VertexSet = pu.iter().copied().collect();
                        let meet = *pv.iter().find(|x| on_pu.contains(**x)).unwrap();
                        let mut cycle: Vec<usize> = pv.iter().copied().take_while(|&x| x != meet).collect();
                        cycle.push(meet);
                        let back: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
                        cycle.extend(back.into_iter().rev());
                        return Some(cycle);
                    }
                    seen.insert(u);
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        None
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut q = VecDeque::from([src]);
        while let Some(v) = q.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    q.push_back(u);
                }
            }
        }
        dist
    }

    /// Vertices within distance `r` of some vertex of `s`.
    pub fn ball(&self, s: &VertexSet, r: usize) -> VertexSet {
        let mut out = s.clone();
        let mut frontier = s.clone();
        for _ in 0..r {
            let mut next = VertexSet::new();
            for v in &frontier {
                next.union_with(&self.nbr[v]);
            }
            next.difference_with(&out);
            if next.is_empty() {
                break;
            }
            out.union_with(&next);
            frontier = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn cycle_witness() {
        let g = cycle(5);
        let c = g.find_cycle_in(&g.vertices()).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..5 {
            assert!(g.has_edge(c[i], c[(i + 1) % 5]));
        }
        assert!(path(5).find_cycle_in(&path(5).vertices()).is_none());
        let k4 = complete(4);
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(k4.find_cycle_in(&s).unwrap().len(), 3);
    }

    #[test]
    fn forest_and_components() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(g.induces_forest(&g.vertices()));
        assert!(!complete(3).induces_forest(&complete(3).vertices()));
        assert_eq!(g.ball(&VertexSet::singleton(0), 1).to_vec(), vec![0, 1]);
    }
}
