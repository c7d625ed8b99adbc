use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// `G[S]` with vertices renumbered in increasing order; `map[i]` is the old id of new vertex `i`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    if let Some(v) = s.last().filter(|&v| v >= g.n()) {
        return Err(Error::input(format!("vertex {v} out of range for n = {}", g.n())));
    }
    let keep = s.to_vec();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| s.contains(u) && s.contains(v))
        .map(|&(u, v)| (new_id[u], new_id[v]));
    Ok((Graph::from_edges_lossy(keep.len(), edges), keep))
}

impl Graph {
    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges_lossy(self.n(), self.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self.edges().iter().copied().chain(other.edges().iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_edges_lossy(off + other.n(), edges)
    }
}

/// `G^k`: `uv` is an edge iff `1 <= dist(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("graph power needs k >= 1"));
    }
    let mut edges = Vec::new();
    for v in 0..g.n() {
        for u in &g.ball(&VertexSet::singleton(v), k) {
            if u > v {
                edges.push((v, u));
            }
        }
    }
    Ok(Graph::from_edges_lossy(g.n(), edges))
}

/// `L²(G)`: one vertex per edge of `G` (in `g.edges()` order); two edges are adjacent
/// when their four endpoints induce a connected subgraph.
pub fn line_graph_square(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let es = g.edges().to_vec();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        let (a, b) = es[i];
        let near = g.closed_neighborhood(&[a, b].into_iter().collect());
        for (j, &(c, d)) in es.iter().enumerate().skip(i + 1) {
            if near.contains(c) || near.contains(d) {
                edges.push((i, j));
            }
        }
    }
    (Graph::from_edges_lossy(es.len(), edges), es)
}

/// `G ⊙ K₁`: vertex `n + v` is the pendant neighbor of `v`.
pub fn corona(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_edges_lossy(2 * n, g.edges().iter().copied().chain((0..n).map(|v| (v, n + v))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForkRole {
    Original,
    /// One of the three degree-1 vertices hung on the given original vertex.
    Pendant(usize),
    /// Middle vertex of the two-edge path at the given marked vertex.
    PathMiddle(usize),
    /// Far end of the two-edge path at the given marked vertex.
    PathEnd(usize),
}

/// Forked version of `(G, M)`: three pendants on every vertex, plus a two-edge path on each vertex of `M`.
///
/// Original vertices keep their ids.
pub fn forked_version(g: &Graph, m: &VertexSet) -> Result<(Graph, Vec<ForkRole>)> {
    if let Some(v) = m.last().filter(|&v| v >= g.n()) {
        return Err(Error::input(format!("marked vertex {v} out of range")));
    }
    let mut roles = vec![ForkRole::Original; g.n()];
    let mut edges = g.edges().to_vec();
    for v in 0..g.n() {
        for _ in 0..3 {
            edges.push((v, roles.len()));
            roles.push(ForkRole::Pendant(v));
        }
    }
    for v in m {
        let mid = roles.len();
        roles.push(ForkRole::PathMiddle(v));
        roles.push(ForkRole::PathEnd(v));
        edges.push((v, mid));
        edges.push((mid, mid + 1));
    }
    Ok((Graph::from_edges_lossy(roles.len(), edges), roles))
}

/// Recovers `(G, M)` from a forked version.
///
/// Originals are the vertices of degree at least 3 (added vertices have degree at most 2);
/// marked vertices are originals adjacent to an added vertex of degree 2.
pub fn decode_forked(f: &Graph) -> (Graph, VertexSet) {
    let orig: VertexSet = (0..f.n()).filter(|&v| f.degree(v) >= 3).collect();
    let (g, map) = induced_subgraph(f, &orig).expect("in range");
    let marked = map
        .iter()
        .enumerate()
        .filter(|(_, &v)| f.neighbors(v).iter().any(|&u| !orig.contains(u) && f.degree(u) == 2))
        .map(|(i, _)| i)
        .collect();
    (g, marked)
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry, `UNREACHABLE` for disconnected pairs.
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.raw(u, v);
        (d != Self::UNREACHABLE).then_some(d as usize)
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    for s in 0..n {
        for (v, dv) in g.bfs(s).into_iter().enumerate() {
            if let Some(x) = dv {
                d[s * n + v] = x as u32;
            }
        }
    }
    DistanceMatrix { n, d }
}

/// `G - v`; `map[old]` is the new id, `None` for `v`.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    let map: Vec<Option<usize>> = (0..g.n()).map(|x| (x != v).then(|| x - usize::from(x > v))).collect();
    let edges = g.edges().iter().filter_map(|&(a, b)| Some((map[a]?, map[b]?)));
    Ok((Graph::from_edges_lossy(g.n() - 1, edges), map))
}

/// `G / uv`: `v` merges into `u`; returns the old-to-new map (both endpoints map to the merged vertex).
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::input(format!("cannot contract non-edge ({u}, {v})")));
    }
    let map: Vec<usize> = (0..g.n())
        .map(|x| {
            let y = if x == v { u } else { x };
            y - usize::from(y > v)
        })
        .collect();
    let edges = g.edges().iter().map(|&(a, b)| (map[a], map[b]));
    Ok((Graph::from_edges_lossy(g.n() - 1, edges), map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn small_transforms() {
        let (p3, map) = induced_subgraph(&cycle(5), &[0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p3, path(3));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(induced_subgraph(&cycle(5), &VertexSet::new()).unwrap().0.n(), 0);
        assert_eq!(graph_power(&path(4), 3).unwrap(), complete(4));
        assert!(graph_power(&path(4), 0).is_err());
        assert!((0..6).all(|v| graph_power(&cycle(6), 2).unwrap().degree(v) == 4));
        assert_eq!(line_graph_square(&path(3)).0, complete(2));
        assert_eq!(line_graph_square(&path(4)).0, complete(3));
        assert_eq!(line_graph_square(&cycle(5)).0, complete(5));
        assert_eq!(corona(&complete(1)), complete(2));
        let c = corona(&complete(3));
        assert_eq!((c.n(), c.m()), (6, 6));
    }

    #[test]
    fn forked_small() {
        let (f, _) = forked_version(&complete(1), &VertexSet::new()).unwrap();
        assert_eq!(f, complete_bipartite(1, 3));
        let (f, roles) = forked_version(&complete(2), &[0, 1].into_iter().collect()).unwrap();
        assert_eq!(f.n(), 12);
        assert_eq!(roles.iter().filter(|r| matches!(r, ForkRole::PathEnd(_))).count(), 2);
        assert_eq!(decode_forked(&f), (complete(2), [0, 1].into_iter().collect()));
    }

    #[test]
    fn distances() {
        let d = distance_matrix(&path(3));
        assert_eq!(d.get(0, 2), Some(2));
        let e = distance_matrix(&Graph::edgeless(2));
        assert_eq!(e.raw(0, 1), DistanceMatrix::UNREACHABLE);
        assert_eq!(e.get(1, 1), Some(0));
    }

    #[test]
    fn minors() {
        let (h, map) = contract_edge(&complete(3), 0, 2).unwrap();
        assert_eq!(h, complete(2));
        assert_eq!(map, vec![0, 1, 0]);
        assert!(contract_edge(&path(3), 0, 2).is_err());
        let (h, map) = delete_vertex(&path(3), 1).unwrap();
        assert_eq!(h, Graph::edgeless(2));
        assert_eq!(map, vec![Some(0), None, Some(1)]);
    }
}
