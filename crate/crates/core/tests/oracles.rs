mod common;

use common::{alpha_of, mu_touching};
use imtw::corpus::{graph_corpus, graphs_up_to_isomorphism};
use imtw::graph::*;
use imtw::oracles::*;
use imtw::{Graph, VertexSet, WeightMap};
use rand::{Rng, SeedableRng};
use std::collections::HashMap;
use rand_chacha::ChaCha8Rng;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

// bags {v} ∪ later neighbours in the fill-in, recomputed from scratch
fn fill_bags(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.nbr_set(v).clone()).collect();
    let mut gone = VertexSet::new();
    let mut bags = Vec::new();
    for &v in order {
        let later = adj[v].difference(&gone);
        for a in later.iter() {
            for b in later.iter() {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
        gone.insert(v);
    }
    bags
}

/// (tree-α, tree-μ, treewidth) over all n! orderings.
fn factorial_widths(g: &Graph) -> (usize, usize, usize) {
    let mut memo: HashMap<VertexSet, (usize, usize)> = HashMap::new();
    let mut best = (usize::MAX, usize::MAX, usize::MAX);
    for order in permutations(g.n()) {
        let (mut a, mut m, mut t) = (0, 0, 0);
        for b in fill_bags(g, &order) {
            let &mut (ba, bm) = memo.entry(b.clone()).or_insert_with(|| (alpha_of(g, &b), mu_touching(g, &b)));
            (a, m, t) = (a.max(ba), m.max(bm), t.max(b.len() - 1));
        }
        best = (best.0.min(a), best.1.min(m), best.2.min(t));
    }
    best
}

#[test]
fn exact_widths_agree_with_factorial_search() {
    for g in graphs_up_to_isomorphism(6, 15) {
        if g.n() == 0 {
            continue;
        }
        let ex = exact_width_parameters(&g).unwrap();
        assert_eq!((ex.tree_alpha, ex.tree_mu, ex.treewidth), factorial_widths(&g), "{:?}", g.edges());
        assert!(ex.tree_mu <= ex.tree_alpha && ex.tree_alpha <= ex.treewidth + 1);
        // the witnesses realise the values
        let bags = fill_bags(&g, &ex.alpha_ordering);
        assert_eq!(bags.iter().map(|b| alpha_of(&g, b)).max().unwrap(), ex.tree_alpha);
        let bags = fill_bags(&g, &ex.mu_ordering);
        assert_eq!(bags.iter().map(|b| mu_touching(&g, b)).max().unwrap(), ex.tree_mu);
    }
}

#[test]
fn exact_width_examples() {
    let k33 = complete_bipartite(3, 3);
    let ex = exact_width_parameters(&k33).unwrap();
    assert_eq!((ex.tree_alpha, ex.tree_mu), (3, 1));
    assert_eq!(exact_width_parameters(&cycle(6)).unwrap().tree_mu, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..20 {
        let g = random_chordal(rng.gen_range(1..9), &mut rng);
        assert!(exact_width_parameters(&g).unwrap().tree_alpha <= 1);
    }
    assert!(exact_width_parameters_capped(&complete(8), 7).is_err());
}

#[test]
fn brute_solver_examples() {
    let unit = |n| WeightMap::unit(n);
    assert_eq!(brute_mwis(&cycle(5), &unit(5)).unwrap().0, 2);
    let w = WeightMap::from_integers(&[3, 9, 4, 1]).unwrap();
    assert_eq!(brute_mwis(&complete(4), &w).unwrap().0, 9);
    assert_eq!(brute_mwis(&petersen(), &unit(10)).unwrap().0, 4);
    assert_eq!(brute_max_weight_induced_forest(&complete(4), &unit(4)).unwrap().0, 2);
    assert_eq!(brute_max_weight_induced_forest(&cycle(5), &unit(5)).unwrap().0, 4);
    let (pw, ps) = brute_max_weight_induced_forest(&petersen(), &unit(10)).unwrap();
    assert!(petersen().induces_forest(&ps) && ps.len() as i128 == pw);
    assert_eq!(pw, 7);

    let k3 = enumerate_maximal_induced_forests(&complete(3)).unwrap();
    assert_eq!(k3.len(), 3);
    assert!(k3.iter().all(|s| s.len() == 2));
    assert_eq!(enumerate_maximal_induced_forests(&Graph::edgeless(4)).unwrap(), vec![VertexSet::full(4)]);
    let c4 = enumerate_maximal_induced_forests(&cycle(4)).unwrap();
    assert!(c4.len() == 4 && c4.iter().all(|s| s.len() == 3));
}

#[test]
fn touching_matching_against_square_line_graph() {
    assert!(brute_induced_matching_touching(&petersen(), &VertexSet::new()).unwrap().is_empty());
    let star = complete_bipartite(1, 4);
    assert_eq!(brute_induced_matching_touching(&star, &VertexSet::singleton(0)).unwrap().len(), 1);

    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for g in graph_corpus(52, 100, 2, 9, &[0.25, 0.45]) {
        let x: VertexSet = (0..g.n()).filter(|_| rng.gen_bool(0.4)).collect();
        let m = brute_induced_matching_touching(&g, &x).unwrap();
        let ends: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
        assert!(ends.len() == 2 * m.len() && g.edges_within(&ends) == m.len());
        assert!(m.iter().all(|&(u, v)| x.contains(u) || x.contains(v)));
        // independent sets of L²(G) restricted to the touching edges
        let (l2, emap) = line_graph_square(&g);
        let touching: VertexSet = (0..emap.len()).filter(|&i| x.contains(emap[i].0) || x.contains(emap[i].1)).collect();
        assert_eq!(m.len(), alpha_of(&l2, &touching));
    }
}

fn has_hole(g: &Graph) -> bool {
    g.vertices()
        .subsets()
        .any(|s| s.len() >= 4 && g.is_connected_set(&s) && s.iter().all(|v| g.nbr_set(v).intersection_len(&s) == 2))
}

#[test]
fn chordality_against_hole_scan() {
    assert!(chordality_test(&path(6)).is_chordal());
    assert!(!chordality_test(&cycle(4)).is_chordal());
    for g in graph_corpus(54, 150, 1, 10, &[0.3, 0.5, 0.7]) {
        match chordality_test(&g) {
            Chordality::Chordal(order) => {
                assert!(!has_hole(&g));
                let mut seen = order.clone();
                seen.sort();
                assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
            }
            Chordality::Hole(c) => {
                let s: VertexSet = c.iter().copied().collect();
                assert!(c.len() >= 4 && s.len() == c.len());
                assert_eq!(g.edges_within(&s), c.len());
                assert!(c.iter().zip(c.iter().cycle().skip(1)).all(|(&a, &b)| g.has_edge(a, b)));
            }
        }
    }
}

#[test]
fn recognizer_and_square_line_graph_identity() {
    assert!(recognize_imtw_at_most_1(&cycle(5)));
    assert!(!recognize_imtw_at_most_1(&cycle(6)));
    for g in graphs_up_to_isomorphism(7, 8) {
        let ex = exact_width_parameters(&g).unwrap();
        assert_eq!(recognize_imtw_at_most_1(&g), ex.tree_mu <= 1);
        let l2 = line_graph_square(&g).0;
        if l2.n() > 0 {
            assert_eq!(exact_width_parameters(&l2).unwrap().tree_alpha, ex.tree_mu);
        }
    }
}
