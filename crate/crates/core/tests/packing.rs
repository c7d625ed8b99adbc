use imtw::corpus::graph_corpus;
use imtw::decomp::{decomposition_metrics, heuristic_decomposition, Strategy};
use imtw::graph::graph_power;
use imtw::oracles::brute_max_weight_induced_forest;
use imtw::packing::*;
use imtw::{Ratio, VertexSet, WeightMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_packing(g: &imtw::Graph, fam: &SubgraphFamily, mode: PackingMode) -> i128 {
    let m = fam.len();
    (0u32..1 << m)
        .filter_map(|mask| {
            let chosen: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
            is_valid_packing(g, &fam.members, &chosen, mode).ok()?;
            Some(chosen.iter().map(|&j| fam.weights.get(j)).sum())
        })
        .max()
        .unwrap()
}

#[test]
fn blob_of_balls_is_a_power() {
    for g in graph_corpus(5, 30, 2, 12, &[0.15, 0.3]) {
        for k in 1..=2 {
            let gk = graph_power(&g, k).unwrap();
            for d in 1..=2 {
                let balls: Vec<VertexSet> = (0..g.n()).map(|v| g.ball(&VertexSet::singleton(v), d)).collect();
                assert_eq!(blob_graph(&gk, &balls), graph_power(&g, k + 2 * d).unwrap());
            }
        }
    }
}

#[test]
fn packings_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for g in graph_corpus(9, 40, 4, 12, &[0.2, 0.35]) {
        let sets = enumerate_small_connected_subgraphs(&g, 3, &|_| true, 10_000).unwrap();
        let size = rng.gen_range(1..=12.min(sets.len()));
        let members: Vec<VertexSet> = (0..size).map(|_| sets[rng.gen_range(0..sets.len())].clone()).collect();
        let ws: Vec<Ratio> = (0..size).map(|_| Ratio::new(rng.gen_range(0..20), rng.gen_range(1..4)).unwrap()).collect();
        let fam = SubgraphFamily::new(&g, (0..size as i64).collect(), members, WeightMap::from_ratios(&ws).unwrap()).unwrap();
        let td = heuristic_decomposition(&g, Strategy::MinDegree);
        let k = decomposition_metrics(&g, &td).unwrap().mu;
        for d in [2, 4] {
            let sol = max_weight_distance_d_packing(&g, &td, &fam, d, k).unwrap();
            assert_eq!(sol.weight, brute_packing(&g, &fam, PackingMode::Distance(d)), "d={d}");
        }
    }
}

#[test]
fn ptas_meets_its_guarantee() {
    for g in graph_corpus(13, 20, 4, 10, &[0.3, 0.5]) {
        let td = heuristic_decomposition(&g, Strategy::MinFill);
        let k = decomposition_metrics(&g, &td).unwrap().mu;
        let opt = brute_max_weight_induced_forest(&g, &WeightMap::unit(g.n())).unwrap().0;
        for eps in ["1/4", "1/2"] {
            let eps: Ratio = eps.parse().unwrap();
            let sol = ptas_bounded_treewidth_subgraph(&g, &td, 1, eps, k).unwrap();
            assert!(g.induces_forest(&sol.set));
            // |F| >= (1 - eps) OPT
            assert!(sol.set.len() as i128 * eps.den >= (eps.den - eps.num) * opt);
        }
    }
}
