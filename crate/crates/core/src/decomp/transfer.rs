//! Decompositions of derived graphs built from a decomposition of the source graph.

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{contract_edge, delete_vertex, Graph};
use crate::vertex_set::VertexSet;

/// Bags `N[X_t]` on the same tree.
pub fn closed_neighborhood_expansion(g: &Graph, td: &TreeDecomposition) -> TreeDecomposition {
    td.with_bags(td.bags().iter().map(|b| g.closed_neighborhood(b)).collect())
}

/// Decomposition of the blob graph over `members`: bag `t` holds every `j` with `H_j ∩ X_t ≠ ∅`.
pub fn blob_decomposition(g: &Graph, td: &TreeDecomposition, members: &[VertexSet]) -> Result<TreeDecomposition> {
    for (j, h) in members.iter().enumerate() {
        if h.last().is_some_and(|v| v >= g.n()) || !g.is_connected_set(h) {
            return Err(Error::input(format!("member {j} is empty, out of range, or disconnected")));
        }
    }
    let bags = td
        .bags()
        .iter()
        .map(|b| members.iter().enumerate().filter(|(_, h)| h.intersects(b)).map(|(j, _)| j).collect())
        .collect();
    Ok(td.with_bags(bags))
}

/// Decomposition of `G^r` for odd `r`: bags are radius-`(r-1)/2` balls around the
/// non-isolated part of each bag; each isolated vertex gets its own leaf bag.
pub fn odd_power_decomposition(g: &Graph, td: &TreeDecomposition, r: usize) -> Result<TreeDecomposition> {
    if r % 2 == 0 {
        return Err(Error::input(format!("power {r} is even; only odd powers transfer")));
    }
    let radius = (r - 1) / 2;
    let isolated: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == 0).collect();
    let mut bags: Vec<VertexSet> = td.bags().iter().map(|b| g.ball(&b.difference(&isolated), radius)).collect();
    let mut edges = td.tree_edges().to_vec();
    for v in &isolated {
        let host = td.bags().iter().position(|b| b.contains(v)).ok_or_else(|| Error::input(format!("vertex {v} in no bag")))?;
        edges.push((host, bags.len()));
        bags.push(VertexSet::singleton(v));
    }
    Ok(TreeDecomposition::new(bags, edges, td.root()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorOp {
    Delete(usize),
    Contract(usize, usize),
}

/// Applies a vertex deletion or edge contraction to both the graph and the decomposition.
pub fn induced_minor_decomposition(g: &Graph, td: &TreeDecomposition, op: MinorOp) -> Result<(Graph, TreeDecomposition)> {
    match op {
        MinorOp::Delete(v) => {
            let (h, map) = delete_vertex(g, v)?;
            let bags = td.bags().iter().map(|b| b.iter().filter_map(|x| map[x]).collect()).collect();
            Ok((h, td.with_bags(bags)))
        }
        MinorOp::Contract(u, v) => {
            let (h, map) = contract_edge(g, u, v)?;
            let bags = td.bags().iter().map(|b| b.iter().map(|x| map[x]).collect()).collect();
            Ok((h, td.with_bags(bags)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate_decomposition;
    use crate::graph::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn expansion_of_p3() {
        let td = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[1, 2])]);
        let e = closed_neighborhood_expansion(&path(3), &td);
        assert_eq!(e.bags(), &[vs(&[0, 1, 2]), vs(&[0, 1, 2])]);
        let k = complete(4);
        assert_eq!(closed_neighborhood_expansion(&k, &TreeDecomposition::single_bag(&k)), TreeDecomposition::single_bag(&k));
    }

    #[test]
    fn odd_power_on_p5() {
        let g = path(5);
        let td = TreeDecomposition::path_of((0..4).map(|i| vs(&[i, i + 1])).collect());
        let t3 = odd_power_decomposition(&g, &td, 3).unwrap();
        assert!(validate_decomposition(&graph_power(&g, 3).unwrap(), &t3).is_empty());
        assert!(odd_power_decomposition(&g, &td, 2).is_err());
        let e = Graph::edgeless(3);
        let t = odd_power_decomposition(&e, &TreeDecomposition::single_bag(&e), 3).unwrap();
        assert!(validate_decomposition(&e, &t).is_empty());
        assert_eq!(&t.bags()[1..], &[vs(&[0]), vs(&[1]), vs(&[2])]);
    }

    #[test]
    fn minors() {
        let k3 = complete(3);
        let (h, td) = induced_minor_decomposition(&k3, &TreeDecomposition::single_bag(&k3), MinorOp::Contract(0, 1)).unwrap();
        assert_eq!(h, complete(2));
        assert_eq!(td.bags(), &[vs(&[0, 1])]);
        assert!(induced_minor_decomposition(&path(3), &TreeDecomposition::single_bag(&path(3)), MinorOp::Contract(0, 2)).is_err());
        let g = Graph::edgeless(2);
        let (h, td) = induced_minor_decomposition(&g, &TreeDecomposition::single_bag(&g), MinorOp::Delete(0)).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(td.bags(), &[vs(&[0])]);
    }
}
