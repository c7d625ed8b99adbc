use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{max_independent_set, max_induced_matching_touching, DEFAULT_NODE_CAP};
use crate::vertex_set::VertexSet;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// `α(𝒯)` and `μ(𝒯)` with the lowest-id witnessing bags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMetrics {
    pub alpha: usize,
    pub alpha_node: usize,
    pub alpha_witness: VertexSet,
    pub mu: usize,
    pub mu_node: usize,
    pub mu_witness: Vec<(usize, usize)>,
}

pub fn decomposition_metrics(g: &Graph, td: &TreeDecomposition) -> Result<DecompositionMetrics> {
    decomposition_metrics_capped(g, td, DEFAULT_NODE_CAP)
}

/// Exact per-bag searches; a bag exceeding `cap` search nodes fails with its id.
pub fn decomposition_metrics_capped(g: &Graph, td: &TreeDecomposition, cap: u64) -> Result<DecompositionMetrics> {
    td.check(g)?;
    // nice decompositions repeat bags a lot; evaluate each distinct bag once
    let mut first: BTreeMap<&VertexSet, usize> = BTreeMap::new();
    for (t, b) in td.bags().iter().enumerate() {
        first.entry(b).or_insert(t);
    }
    let distinct: Vec<(&VertexSet, usize)> = first.into_iter().collect();
    let per_bag: Vec<(usize, VertexSet, Vec<(usize, usize)>)> = distinct
        .par_iter()
        .map(|&(bag, t)| {
            let name = |e: Error| match e {
                Error::Resource { limit, reached, .. } => Error::resource(format!("exact search in bag {t}"), limit, reached),
                other => other,
            };
            let a = max_independent_set(g, bag, cap).map_err(name)?;
            let m = max_induced_matching_touching(g, bag, cap).map_err(name)?;
            Ok((t, a, m))
        })
        .collect::<Result<_>>()?;
    let mut out = DecompositionMetrics {
        alpha: 0,
        alpha_node: td.root(),
        alpha_witness: VertexSet::new(),
        mu: 0,
        mu_node: td.root(),
        mu_witness: Vec::new(),
    };
    let mut best_a = (0, usize::MAX);
    let mut best_m = (0, usize::MAX);
    for (t, a, m) in per_bag {
        if a.len() > best_a.0 || (a.len() == best_a.0 && t < best_a.1) {
            best_a = (a.len(), t);
            out.alpha_witness = a;
        }
        if m.len() > best_m.0 || (m.len() == best_m.0 && t < best_m.1) {
            best_m = (m.len(), t);
            out.mu_witness = m;
        }
    }
    out.alpha = best_a.0;
    out.alpha_node = best_a.1.min(td.len() - 1);
    out.mu = best_m.0;
    out.mu_node = best_m.1.min(td.len() - 1);
    if out.mu > out.alpha {
        return Err(Error::Invariant(format!("mu {} exceeds alpha {}", out.mu, out.alpha)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn anchors() {
        let k = complete_bipartite(3, 3);
        let m = decomposition_metrics(&k, &TreeDecomposition::single_bag(&k)).unwrap();
        assert_eq!((m.alpha, m.mu), (3, 1));
        let e = Graph::edgeless(5);
        let m = decomposition_metrics(&e, &TreeDecomposition::single_bag(&e)).unwrap();
        assert_eq!((m.alpha, m.mu), (5, 0));
    }

    #[test]
    fn resource_error_names_bag() {
        let g = random_graph(60, 0.1, 3);
        let err = decomposition_metrics_capped(&g, &TreeDecomposition::single_bag(&g), 10).unwrap_err();
        assert!(matches!(err, Error::Resource { ref what, .. } if what.contains("bag 0")));
    }
}
