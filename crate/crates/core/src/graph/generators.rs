use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn path(n: usize) -> Graph {
    Graph::from_edges_lossy(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_lossy(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The `n`-dimensional cube; vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(n: usize) -> Graph {
    let size = 1usize << n;
    Graph::from_edges_lossy(size, (0..size).flat_map(|u| (0..n).map(move |b| (u, u ^ (1 << b)))))
}

/// Two disjoint copies of `nK₂` with every edge between the copies.
///
/// Copy one holds `0..2n`, copy two `2n..4n`; matching edges are `(2i, 2i+1)` in each copy.
pub fn matching_join(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..2 * n).map(|i| (2 * i, 2 * i + 1)).collect();
    for u in 0..2 * n {
        for v in 2 * n..4 * n {
            edges.push((u, v));
        }
    }
    Graph::from_edges_lossy(4 * n, edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_lossy(10, edges)
}

/// Erdős–Rényi `G(n, p)` driven by a ChaCha8 stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p, &mut rng)
}

pub fn random_graph_with(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_lossy(n, edges)
}

/// Random tree: each vertex `i > 0` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    Graph::from_edges_lossy(n, (1..n).map(|i| (rng.gen_range(0..i), i)).collect::<Vec<_>>())
}

/// Random chordal graph: each new vertex joins a random clique of the current graph.
///
/// Adding a vertex whose neighborhood is a clique keeps the graph chordal.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::edgeless(n);
    let mut edges = Vec::new();
    for v in 1..n {
        // grow a clique greedily from a random seed vertex among 0..v
        let seed = rng.gen_range(0..v);
        let mut clique = VertexSet::singleton(seed);
        for u in 0..v {
            if u != seed && rng.gen_bool(0.5) && clique.is_subset(&g.nbr[u]) {
                clique.insert(u);
            }
        }
        for u in &clique {
            edges.push((u, v));
            g.nbr[u].insert(v);
            g.nbr[v].insert(u);
        }
    }
    Graph::from_edges_lossy(n, edges)
}

/// Chordal host `G` and vertex map `x` with `G^r[x(V(H))] ≅ H` for even `r ≥ 2`.
///
/// Each edge of `H` is subdivided once, the subdivision vertices form a clique,
/// and a path of `(r-2)/2` extra vertices hangs off every original vertex; `x(v)`
/// is the far end of that path.
pub fn chordal_power_gadget(h: &Graph, r: usize) -> Result<(Graph, Vec<usize>)> {
    if r < 2 || r % 2 != 0 {
        return Err(Error::input(format!("gadget needs an even power r >= 2, got {r}")));
    }
    let n = h.n();
    let m = h.m();
    let tail = (r - 2) / 2;
    let total = n + m + n * tail;
    let mut edges = Vec::new();
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
        for j in i + 1..m {
            edges.push((n + i, n + j));
        }
    }
    let mut x = Vec::with_capacity(n);
    for v in 0..n {
        let mut prev = v;
        for t in 0..tail {
            let w = n + m + v * tail + t;
            edges.push((prev, w));
            prev = w;
        }
        x.push(prev);
    }
    Ok((Graph::from_edges(total, &edges)?, x))
}
