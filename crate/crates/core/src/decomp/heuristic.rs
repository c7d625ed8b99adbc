use super::TreeDecomposition;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    MinDegree,
    MinFill,
}

impl FromStr for Strategy {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "min-degree" => Ok(Strategy::MinDegree),
            "min-fill" => Ok(Strategy::MinFill),
            _ => Err(crate::Error::input(format!("unknown strategy '{s}' (min-degree | min-fill)"))),
        }
    }
}

fn fill_in(nbr: &[VertexSet], v: usize) -> usize {
    let ns = &nbr[v];
    let missing: usize = ns.iter().map(|u| ns.len() - 1 - nbr[u].intersection_len(ns)).sum();
    missing / 2
}

/// Elimination ordering chosen greedily; ties go to the lowest vertex id.
pub fn elimination_ordering(g: &Graph, strategy: Strategy) -> Vec<usize> {
    let mut nbr: Vec<VertexSet> = (0..g.n()).map(|v| g.nbr_set(v).clone()).collect();
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| match strategy {
                Strategy::MinDegree => (nbr[v].len(), 0),
                Strategy::MinFill => (fill_in(&nbr, v), nbr[v].len()),
            })
            .unwrap();
        eliminate(&mut nbr, v);
        alive.remove(v);
        order.push(v);
    }
    order
}

fn eliminate(nbr: &mut [VertexSet], v: usize) {
    let ns = nbr[v].clone();
    for u in &ns {
        let mut add = ns.clone();
        add.remove(u);
        nbr[u].union_with(&add);
        nbr[u].remove(v);
    }
    nbr[v] = VertexSet::new();
}

/// Decomposition whose bags are the maximal cliques of the chordal completion of `order`,
/// arranged as a clique tree.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![VertexSet::new()], vec![], 0);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nbr: Vec<VertexSet> = (0..n).map(|v| g.nbr_set(v).clone()).collect();
    // node i belongs to the i-th eliminated vertex
    let mut bags = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    for &v in order {
        let later = nbr[v].clone();
        let mut bag = later.clone();
        bag.insert(v);
        bags.push(bag);
        parent.push(later.iter().min_by_key(|&u| pos[u]).map(|u| pos[u]));
        eliminate(&mut nbr, v);
    }
    // chain component roots so the result is one tree
    let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
    for w in roots.windows(2) {
        parent[w[0]] = Some(w[1]);
    }
    // contract tree edges whose bags are nested until none remain
    let mut alias: Vec<usize> = (0..n).collect();
    let find = |alias: &Vec<usize>, mut x: usize| {
        while alias[x] != x {
            x = alias[x];
        }
        x
    };
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            if alias[i] != i {
                continue;
            }
            if let Some(p) = parent[i].map(|p| find(&alias, p)) {
                if bags[i].is_subset(&bags[p]) || bags[p].is_subset(&bags[i]) {
                    let merged = bags[i].union(&bags[p]);
                    bags[p] = merged;
                    alias[i] = p;
                    changed = true;
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| alias[i] == i).collect();
    let mut id = vec![usize::MAX; n];
    // root gets node 0, then decreasing elimination position for stable numbering
    for (k, &i) in keep.iter().rev().enumerate() {
        id[i] = k;
    }
    let new_bags: Vec<VertexSet> = keep.iter().rev().map(|&i| bags[i].clone()).collect();
    let edges: Vec<(usize, usize)> = keep
        .iter()
        .filter_map(|&i| parent[i].map(|p| (id[find(&alias, p)], id[i])))
        .collect();
    TreeDecomposition::new(new_bags, edges, 0)
}

pub fn heuristic_decomposition(g: &Graph, strategy: Strategy) -> TreeDecomposition {
    decomposition_from_ordering(g, &elimination_ordering(g, strategy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate_decomposition;
    use crate::graph::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trees_get_width_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let t = random_tree(12, &mut rng);
            for s in [Strategy::MinDegree, Strategy::MinFill] {
                let td = heuristic_decomposition(&t, s);
                assert!(validate_decomposition(&t, &td).is_empty());
                assert!(td.max_bag_size() <= 2);
            }
        }
    }

    #[test]
    fn chordal_bags_are_cliques() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let g = random_chordal(12, &mut rng);
            let td = heuristic_decomposition(&g, Strategy::MinFill);
            assert!(validate_decomposition(&g, &td).is_empty());
            assert!(td.bags().iter().all(|b| g.is_clique(b)));
        }
    }

    #[test]
    fn random_valid_and_root_zero() {
        for seed in 0..40 {
            let g = random_graph(11, 0.3, seed);
            for s in [Strategy::MinDegree, Strategy::MinFill] {
                let td = heuristic_decomposition(&g, s);
                assert!(validate_decomposition(&g, &td).is_empty(), "seed {seed}");
                assert_eq!(td.root(), 0);
            }
        }
        assert!(heuristic_decomposition(&Graph::edgeless(0), Strategy::MinFill).is_tree());
    }
}
