use imtw::graph::*;
use imtw::oracles::{chordality_test, exact_width_parameters};
use imtw::{Graph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

// Floyd-Warshall, independent of the BFS in the library
fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn assert_well_formed(g: &Graph) {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        assert!(nb.windows(2).all(|w| w[0] < w[1]));
        for &u in nb {
            assert!(u < g.n() && u != v);
            assert!(g.neighbors(u).contains(&v));
        }
    }
    assert_eq!(g.edges().len() * 2, (0..g.n()).map(|v| g.degree(v)).sum::<usize>());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn io_round_trip(g in arb_graph(12)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn distances_match_floyd(g in arb_graph(10)) {
        let dm = distance_matrix(&g);
        let fw = floyd(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(dm.get(u, v), fw[u][v]);
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
            }
        }
    }

    #[test]
    fn power_edges_are_short_distances(g in arb_graph(10), k in 1usize..4) {
        let p = graph_power(&g, k).unwrap();
        assert_well_formed(&p);
        let fw = floyd(&g);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                prop_assert_eq!(p.has_edge(u, v), fw[u][v].is_some_and(|d| d <= k));
            }
        }
    }

    #[test]
    fn induced_subgraph_counts_internal_edges(g in arb_graph(10), mask in any::<u16>()) {
        let s: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, map) = induced_subgraph(&g, &s).unwrap();
        prop_assert_eq!(h.n(), s.len());
        let mut brute = 0;
        for u in s.iter() {
            for v in s.iter() {
                if u < v && g.has_edge(u, v) {
                    brute += 1;
                }
            }
        }
        prop_assert_eq!(h.m(), brute);
        for &(a, b) in h.edges() {
            prop_assert!(g.has_edge(map[a], map[b]));
        }
    }

    #[test]
    fn line_graph_square_rule(g in arb_graph(8)) {
        let (l2, emap) = line_graph_square(&g);
        prop_assert_eq!(l2.n(), g.m());
        for i in 0..emap.len() {
            for j in i + 1..emap.len() {
                let (a, b) = emap[i];
                let (c, d) = emap[j];
                let ends: VertexSet = [a, b, c, d].into_iter().collect();
                prop_assert_eq!(l2.has_edge(i, j), g.is_connected_set(&ends));
            }
        }
    }

    #[test]
    fn corona_preserves_original(g in arb_graph(10)) {
        let c = corona(&g);
        let n = g.n();
        prop_assert_eq!(c.n(), 2 * n);
        prop_assert_eq!(c.m(), g.m() + n);
        let (orig, _) = induced_subgraph(&c, &VertexSet::full(n)).unwrap();
        prop_assert_eq!(&orig, &g);
        for v in n..2 * n {
            prop_assert_eq!(c.degree(v), 1);
        }
    }
}

#[test]
fn small_examples() {
    let p3 = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
    assert_eq!(p3, path(3));
    let k1 = parse_graph("p edge 1 0\n").unwrap();
    assert_eq!((k1.n(), k1.m()), (1, 0));

    assert_eq!(imtw::corpus::canonical_code(&hypercube(2)), imtw::corpus::canonical_code(&cycle(4)));
    let q4 = hypercube(4);
    assert_eq!((q4.n(), q4.m()), (16, 32));

    // two disjoint K2 plus all four edges between them
    let mj = matching_join(1);
    assert_eq!(mj.n(), 4);
    assert_eq!(mj.m(), 2 + 4);
    assert_eq!(matching_join(3).n(), 12);

    assert_eq!(graph_power(&path(4), 3).unwrap(), complete(4));
    let c6sq = graph_power(&cycle(6), 2).unwrap();
    assert!((0..6).all(|v| c6sq.degree(v) == 4));
    assert!(graph_power(&path(3), 0).is_err());

    assert_eq!(line_graph_square(&path(3)).0, complete(2));
    assert_eq!(line_graph_square(&path(4)).0, complete(3));
    assert_eq!(line_graph_square(&cycle(5)).0, complete(5));

    assert_eq!(corona(&complete(1)), complete(2));
    let ck3 = corona(&complete(3));
    assert_eq!((ck3.n(), ck3.m()), (6, 6));

    let dm = distance_matrix(&path(3));
    assert_eq!(dm.get(0, 2), Some(2));
    assert_eq!(distance_matrix(&Graph::edgeless(2)).get(0, 1), None);

    let c5: VertexSet = [0, 1, 2].into_iter().collect();
    assert_eq!(induced_subgraph(&cycle(5), &c5).unwrap().0, path(3));
    assert_eq!(induced_subgraph(&cycle(5), &VertexSet::new()).unwrap().0.n(), 0);
}

#[test]
fn malformed_inputs_are_rejected() {
    for bad in [
        "e 1 2\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2 2\ne 1 2\ne 2 1\n",
        "p edge 2 1\ne 1 1\n",
        "p edge x 1\n",
    ] {
        assert!(parse_graph(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn forked_version_examples_and_round_trip() {
    let (star, _) = forked_version(&complete(1), &VertexSet::new()).unwrap();
    assert_eq!(star, complete_bipartite(1, 3));
    let (f, _) = forked_version(&complete(2), &VertexSet::full(2)).unwrap();
    assert_eq!(f.n(), 12);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_graph_with(n, 0.4, &mut rng);
        let m: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let (f, roles) = forked_version(&g, &m).unwrap();
        assert_eq!(roles.len(), f.n());
        let (g2, m2) = decode_forked(&f);
        assert_eq!((g2, m2), (g, m));
    }
}

#[test]
fn chordal_power_gadget_embeds_h() {
    assert!(chordal_power_gadget(&cycle(5), 3).is_err());
    let mut hs = vec![cycle(5), path(4), complete(3), complete_bipartite(2, 3), Graph::edgeless(3)];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let n = rng.gen_range(1..=6);
        hs.push(random_graph_with(n, 0.5, &mut rng));
    }
    for h in &hs {
        for r in [2, 4] {
            let (g, x) = chordal_power_gadget(h, r).unwrap();
            assert!(chordality_test(&g).is_chordal());
            let p = graph_power(&g, r).unwrap();
            for a in 0..h.n() {
                for b in a + 1..h.n() {
                    assert_eq!(p.has_edge(x[a], x[b]), h.has_edge(a, b));
                }
            }
        }
    }
}

#[test]
fn corona_turns_tree_alpha_into_tree_mu() {
    for n in 1..=4 {
        for g in imtw::corpus::graphs_up_to_isomorphism(n, 6) {
            if g.n() != n {
                continue;
            }
            let a = exact_width_parameters(&g).unwrap().tree_alpha;
            let m = exact_width_parameters(&corona(&g)).unwrap().tree_mu;
            assert_eq!(a, m);
        }
    }
}

#[test]
fn generators_are_well_formed() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in [path(6), cycle(7), complete(5), complete_bipartite(3, 4), hypercube(3), matching_join(2), petersen()] {
        assert_well_formed(&g);
    }
    for _ in 0..20 {
        assert_well_formed(&random_graph_with(12, 0.3, &mut rng));
        let t = random_tree(10, &mut rng);
        assert!(t.induces_forest(&t.vertices()) && t.components().len() == 1);
        assert!(chordality_test(&random_chordal(10, &mut rng)).is_chordal());
    }
}
