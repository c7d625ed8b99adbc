//! Boundaried graphs, finite type algebras for a few hereditary properties, and the
//! structured DP that maximizes weight over induced subgraphs with a bounded clique number.

mod algebra;
mod dp;

pub use algebra::{BipartiteAlgebra, Boundary, ForestAlgebra, MaxDegreeAlgebra, TypeAlgebra};
pub use dp::{clique_number_at_most, generic_structured_dp, generic_structured_dp_capped, solve_builtin, BuiltinProperty, StructuredSolution, DEFAULT_STRUCTURED_STATE_CAP};

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;

/// Label values are `1..=ell`.
pub type Label = u16;

/// A graph with an injective partial labelling into `1..=ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundariedGraph {
    graph: Graph,
    labels: Vec<Option<Label>>,
    ell: usize,
}

impl BoundariedGraph {
    pub fn new(graph: Graph, labels: Vec<Option<Label>>, ell: usize) -> Result<Self> {
        if labels.len() != graph.n() {
            return Err(Error::input("one label slot per vertex expected"));
        }
        let mut seen = vec![false; ell + 1];
        for l in labels.iter().flatten() {
            let l = *l as usize;
            if l == 0 || l > ell {
                return Err(Error::input(format!("label {l} outside 1..={ell}")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::input(format!("label {l} used twice")));
            }
        }
        Ok(BoundariedGraph { graph, labels, ell })
    }

    pub fn unlabelled(graph: Graph, ell: usize) -> Self {
        let n = graph.n();
        BoundariedGraph { graph, labels: vec![None; n], ell }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[Option<Label>] {
        &self.labels
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn vertex_with(&self, l: Label) -> Option<usize> {
        self.labels.iter().position(|&x| x == Some(l))
    }

    pub fn boundary(&self) -> Vec<Label> {
        let mut ls: Vec<Label> = self.labels.iter().flatten().copied().collect();
        ls.sort_unstable();
        ls
    }

    /// Disjoint union identifying equally labelled vertices; parallel edges collapse.
    pub fn glue(&self, other: &BoundariedGraph) -> Result<BoundariedGraph> {
        if self.ell != other.ell {
            return Err(Error::input(format!("cannot glue {}-boundaried with {}-boundaried", self.ell, other.ell)));
        }
        let mut labels = self.labels.clone();
        let mut map = Vec::with_capacity(other.graph.n());
        for v in 0..other.graph.n() {
            match other.labels[v].and_then(|l| self.vertex_with(l)) {
                Some(u) => map.push(u),
                None => {
                    map.push(labels.len());
                    labels.push(other.labels[v]);
                }
            }
        }
        let mut edges = self.graph.edges().to_vec();
        edges.extend(other.graph.edges().iter().map(|&(u, v)| (map[u], map[v])));
        Ok(BoundariedGraph { graph: Graph::from_edges_lossy(labels.len(), edges), labels, ell: self.ell })
    }

    /// Drops label `l` and keeps its vertex; no-op when `l` is unused.
    pub fn forget_label(&self, l: Label) -> BoundariedGraph {
        let mut out = self.clone();
        for x in &mut out.labels {
            if *x == Some(l) {
                *x = None;
            }
        }
        out
    }

    /// Random graph on `n` vertices, each vertex labelled with probability one half.
    pub fn random<R: Rng>(n: usize, p: f64, ell: usize, rng: &mut R) -> BoundariedGraph {
        let graph = crate::graph::random_graph_with(n, p, rng);
        let mut pool: Vec<Label> = (1..=ell as Label).collect();
        let mut labels = vec![None; n];
        for slot in &mut labels {
            if !pool.is_empty() && rng.gen_bool(0.5) {
                let i = rng.gen_range(0..pool.len());
                *slot = Some(pool.swap_remove(i));
            }
        }
        BoundariedGraph { graph, labels, ell }
    }
}

/// Upper bound on the Ramsey number `R(a, b)`: exact for a few small pairs, else `C(a+b-2, a-1)`.
pub fn ramsey_upper(a: usize, b: usize) -> u64 {
    let (a, b) = (a.min(b), a.max(b));
    match (a, b) {
        (0, _) => 0,
        (1, _) => 1,
        (2, b) => b as u64,
        (3, 3) => 6,
        (3, 4) => 9,
        (4, 4) => 18,
        _ => num_integer::binomial((a + b - 2) as u64, (a - 1) as u64),
    }
}
