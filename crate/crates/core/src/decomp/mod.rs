//! Rooted tree decompositions, their validation and nice form.

mod heuristic;
mod io;
mod metrics;
mod nice;
mod transfer;

pub use heuristic::{decomposition_from_ordering, elimination_ordering, heuristic_decomposition, Strategy};
pub use io::{parse_td, write_td};
pub use metrics::{decomposition_metrics, decomposition_metrics_capped, DecompositionMetrics};
pub use nice::{make_nice, NiceTreeDecomposition, NodeKind};
pub use transfer::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;
use std::fmt;

/// Bags on a tree; node ids are `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    root: usize,
    shape: Option<Shape>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Shape {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Children before parents.
    postorder: Vec<usize>,
}

fn shape_of(nodes: usize, edges: &[(usize, usize)], root: usize) -> std::result::Result<Shape, String> {
    if nodes == 0 {
        return Err("decomposition has no nodes".into());
    }
    if root >= nodes {
        return Err(format!("root {root} is not a node"));
    }
    if edges.len() != nodes - 1 {
        return Err(format!("{} tree edges for {nodes} nodes", edges.len()));
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(format!("bad tree edge ({a}, {b})"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; nodes];
    let mut children = vec![Vec::new(); nodes];
    let mut seen = vec![false; nodes];
    let mut order = vec![root];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let t = order[i];
        i += 1;
        let mut next: Vec<usize> = adj[t].iter().copied().filter(|&c| !seen[c]).collect();
        next.sort_unstable();
        for c in next {
            seen[c] = true;
            parent[c] = Some(t);
            children[t].push(c);
            order.push(c);
        }
    }
    if order.len() != nodes {
        return Err("tree edges do not connect all nodes".into());
    }
    order.reverse();
    Ok(Shape { parent, children, postorder: order })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotATree { reason: String },
    VertexOutOfRange { node: usize, vertex: usize },
    UncoveredVertex { vertex: usize },
    UncoveredEdge { u: usize, v: usize },
    DisconnectedTrace { vertex: usize },
    NotNice { node: usize, reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree { reason } => write!(f, "not a tree: {reason}"),
            Violation::VertexOutOfRange { node, vertex } => write!(f, "bag {node} holds unknown vertex {vertex}"),
            Violation::UncoveredVertex { vertex } => write!(f, "vertex {vertex} in no bag"),
            Violation::UncoveredEdge { u, v } => write!(f, "edge ({u}, {v}) in no bag"),
            Violation::DisconnectedTrace { vertex } => write!(f, "bags holding {vertex} are not connected"),
            Violation::NotNice { node, reason } => write!(f, "node {node} is not nice: {reason}"),
        }
    }
}

impl TreeDecomposition {
    /// Accepts any bags/edges; use [`validate_decomposition`] before relying on the axioms.
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>, root: usize) -> Self {
        let shape = shape_of(bags.len(), &edges, root).ok();
        TreeDecomposition { bags, edges, root, shape }
    }

    /// Single bag holding every vertex.
    pub fn single_bag(g: &Graph) -> Self {
        TreeDecomposition::new(vec![g.vertices()], vec![], 0)
    }

    /// Path of bags `bags[0] - bags[1] - ...`, rooted at the first.
    pub fn path_of(bags: Vec<VertexSet>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, edges, 0)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_tree(&self) -> bool {
        self.shape.is_some()
    }

    fn shape(&self) -> &Shape {
        self.shape.as_ref().expect("decomposition tree is malformed")
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.shape().parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.shape().children[t]
    }

    pub fn postorder(&self) -> &[usize] {
        &self.shape().postorder
    }

    /// Same tree and root, new bags.
    pub fn with_bags(&self, bags: Vec<VertexSet>) -> Self {
        assert_eq!(bags.len(), self.bags.len());
        TreeDecomposition { bags, edges: self.edges.clone(), root: self.root, shape: self.shape.clone() }
    }

    pub fn rerooted(&self, root: usize) -> Self {
        TreeDecomposition::new(self.bags.clone(), self.edges.clone(), root)
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// `V_t`: union of the bags in the subtree of each node.
    pub fn subtree_vertices(&self) -> Vec<VertexSet> {
        let mut out = self.bags.clone();
        for &t in self.postorder() {
            for &c in self.children(t) {
                let below = out[c].clone();
                out[t].union_with(&below);
            }
        }
        out
    }

    /// Errors with the first violation unless the decomposition is valid for `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        match validate_decomposition(g, self).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::input(format!("invalid tree decomposition: {v}"))),
        }
    }
}

/// Every violated axiom with a witness; empty when valid.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Err(reason) = shape_of(td.bags.len(), &td.edges, td.root) {
        out.push(Violation::NotATree { reason });
    }
    for (t, bag) in td.bags.iter().enumerate() {
        if let Some(v) = bag.last().filter(|&v| v >= g.n()) {
            out.push(Violation::VertexOutOfRange { node: t, vertex: v });
        }
    }
    let mut covered = VertexSet::new();
    for b in &td.bags {
        covered.union_with(b);
    }
    for v in g.vertices().difference(&covered) {
        out.push(Violation::UncoveredVertex { vertex: v });
    }
    for &(u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            out.push(Violation::UncoveredEdge { u, v });
        }
    }
    // trace connectivity: nodes holding v, joined by tree edges between two such nodes,
    // form a tree iff (#nodes - #internal edges) == 1
    for v in covered.iter().filter(|&v| v < g.n()) {
        let holders = td.bags.iter().filter(|b| b.contains(v)).count();
        let inner = td.edges.iter().filter(|&&(a, b)| td.bags.get(a).is_some_and(|x| x.contains(v))
            && td.bags.get(b).is_some_and(|x| x.contains(v))).count();
        if holders != inner + 1 {
            out.push(Violation::DisconnectedTrace { vertex: v });
        }
    }
    out
}

/// Some `v` and node `t` with `N[v] ⊆ X_t`; lowest node id first, then lowest vertex.
pub fn find_bag_dominated_vertex(g: &Graph, td: &TreeDecomposition) -> Result<(usize, usize)> {
    if g.n() == 0 {
        return Err(Error::input("null graph has no vertex"));
    }
    for (t, bag) in td.bags.iter().enumerate() {
        for v in bag {
            if g.nbr_set(v).is_subset(bag) {
                return Ok((v, t));
            }
        }
    }
    Err(Error::Invariant("no vertex has its closed neighborhood inside a bag".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn validation_examples() {
        let p3 = path(3);
        assert!(validate_decomposition(&p3, &TreeDecomposition::single_bag(&p3)).is_empty());
        let good = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[1, 2])]);
        assert!(validate_decomposition(&p3, &good).is_empty());
        let bad = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[2])]);
        assert_eq!(validate_decomposition(&p3, &bad), vec![Violation::UncoveredEdge { u: 1, v: 2 }]);
        let broken = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[2]), vs(&[1, 2])]);
        assert_eq!(validate_decomposition(&p3, &broken), vec![Violation::DisconnectedTrace { vertex: 1 }]);
        let cyc = TreeDecomposition::new(vec![vs(&[0, 1, 2]); 3], vec![(0, 1), (1, 2), (2, 0)], 0);
        assert!(matches!(validate_decomposition(&p3, &cyc)[0], Violation::NotATree { .. }));
        let missing = TreeDecomposition::single_bag(&path(2));
        assert_eq!(validate_decomposition(&p3, &missing)[0], Violation::UncoveredVertex { vertex: 2 });
    }

    #[test]
    fn dominated_vertex() {
        let p3 = path(3);
        let td = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[1, 2])]);
        assert_eq!(find_bag_dominated_vertex(&p3, &td).unwrap(), (0, 0));
        assert!(find_bag_dominated_vertex(&Graph::edgeless(0), &td).is_err());
    }

    #[test]
    fn subtree_sets() {
        let td = TreeDecomposition::new(vec![vs(&[0]), vs(&[1]), vs(&[2])], vec![(0, 1), (1, 2)], 0);
        assert_eq!(td.subtree_vertices(), vec![vs(&[0, 1, 2]), vs(&[1, 2]), vs(&[2])]);
        assert_eq!(td.postorder(), &[2, 1, 0]);
    }
}
