#![allow(dead_code)]

use imtw::decomp::{decomposition_from_ordering, TreeDecomposition};
use imtw::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Largest independent set of `g[s]`, by scanning all subsets.
pub fn alpha_of(g: &Graph, s: &VertexSet) -> usize {
    s.subsets().filter(|x| g.is_independent(x)).map(|x| x.len()).max().unwrap_or(0)
}

/// Largest induced matching whose edges all touch `x`, by scanning edge subsets.
pub fn mu_touching(g: &Graph, x: &VertexSet) -> usize {
    let es: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| x.contains(u) || x.contains(v)).collect();
    assert!(es.len() <= 20);
    let mut best = 0;
    for mask in 0u32..1 << es.len() {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let chosen: Vec<_> = (0..es.len()).filter(|i| mask >> i & 1 == 1).map(|i| es[i]).collect();
        let ends: VertexSet = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
        if ends.len() == 2 * k && g.edges_within(&ends) == k {
            best = k;
        }
    }
    best
}

/// A valid decomposition built from a uniformly random elimination ordering.
pub fn random_decomposition(g: &Graph, rng: &mut impl Rng) -> TreeDecomposition {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    decomposition_from_ordering(g, &order)
}
