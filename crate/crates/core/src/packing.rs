//! Independent and distance-`d` packings of connected subgraphs via blob graphs,
//! and the approximation scheme for large induced subgraphs of small treewidth.

use crate::decomp::{blob_decomposition, make_nice, odd_power_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{graph_power, induced_subgraph, Graph};
use crate::mis_traces::mwis_dp;
use crate::oracles::exact_width_parameters_capped;
use crate::util::DetMap;
use crate::vertex_set::VertexSet;
use crate::weights::{Ratio, WeightMap};
use serde::Serialize;

pub const DEFAULT_SUBGRAPH_CAP: usize = 200_000;

/// Indexed connected vertex sets `H_j` with weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphFamily {
    pub ids: Vec<i64>,
    pub members: Vec<VertexSet>,
    pub weights: WeightMap,
}

impl SubgraphFamily {
    pub fn new(g: &Graph, ids: Vec<i64>, members: Vec<VertexSet>, weights: WeightMap) -> Result<Self> {
        if ids.len() != members.len() || weights.len() != members.len() {
            return Err(Error::input("family ids, members and weights differ in length"));
        }
        for (j, h) in members.iter().enumerate() {
            if h.last().is_some_and(|v| v >= g.n()) {
                return Err(Error::input(format!("member {} has a vertex out of range", ids[j])));
            }
            if !g.is_connected_set(h) {
                return Err(Error::input(format!("member {} is empty or disconnected", ids[j])));
            }
        }
        Ok(SubgraphFamily { ids, members, weights })
    }

    /// Members numbered `0..`, unit weights.
    pub fn unit(g: &Graph, members: Vec<VertexSet>) -> Result<Self> {
        let n = members.len();
        SubgraphFamily::new(g, (0..n as i64).collect(), members, WeightMap::unit(n))
    }

    pub fn singletons(g: &Graph, w: &WeightMap) -> Self {
        SubgraphFamily {
            ids: (0..g.n() as i64).collect(),
            members: (0..g.n()).map(VertexSet::singleton).collect(),
            weights: w.clone(),
        }
    }

    pub fn edges(g: &Graph) -> Self {
        let members: Vec<VertexSet> = g.edges().iter().map(|&(u, v)| [u, v].into_iter().collect()).collect();
        let m = members.len();
        SubgraphFamily { ids: (0..m as i64).collect(), members, weights: WeightMap::unit(m) }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_duplicate_free(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.members.iter().all(|m| seen.insert(m))
    }

    /// Keeps the heaviest copy of each vertex set (the first on ties); returns original indices.
    pub fn dedup(&self) -> (SubgraphFamily, Vec<usize>) {
        let mut best: DetMap<&VertexSet, usize> = DetMap::default();
        for (j, h) in self.members.iter().enumerate() {
            let e = best.entry(h).or_insert(j);
            if self.weights.get(j) > self.weights.get(*e) {
                *e = j;
            }
        }
        let mut keep: Vec<usize> = best.into_values().collect();
        keep.sort_unstable();
        let fam = SubgraphFamily {
            ids: keep.iter().map(|&j| self.ids[j]).collect(),
            members: keep.iter().map(|&j| self.members[j].clone()).collect(),
            weights: self.weights.restrict(&keep),
        };
        (fam, keep)
    }
}

#[derive(serde::Deserialize)]
struct RawMember {
    id: i64,
    vertices: Vec<usize>,
    #[serde(default)]
    weight: Option<serde_json::Value>,
}

/// Parses `[{"id": .., "vertices": [1-based ..], "weight": "num[/den]"}, ..]`; weight defaults to 1.
pub fn parse_family_json(text: &str, g: &Graph) -> Result<SubgraphFamily> {
    let raw: Vec<RawMember> = serde_json::from_str(text).map_err(|e| Error::Input { line: Some(e.line()), message: e.to_string() })?;
    let mut ids = Vec::new();
    let mut members = Vec::new();
    let mut ws = Vec::new();
    for m in raw {
        let mut h = VertexSet::new();
        for v in m.vertices {
            if v == 0 || v > g.n() {
                return Err(Error::input(format!("member {}: vertex {v} out of range", m.id)));
            }
            h.insert(v - 1);
        }
        let w = match m.weight {
            None => Ratio::integer(1),
            Some(serde_json::Value::String(s)) => s.parse()?,
            Some(serde_json::Value::Number(x)) => x.to_string().parse()?,
            Some(other) => return Err(Error::input(format!("member {}: bad weight {other}", m.id))),
        };
        ids.push(m.id);
        members.push(h);
        ws.push(w);
    }
    SubgraphFamily::new(g, ids, members, WeightMap::from_ratios(&ws)?)
}

pub fn write_family_json(fam: &SubgraphFamily) -> String {
    let arr: Vec<serde_json::Value> = (0..fam.len())
        .map(|j| {
            serde_json::json!({
                "id": fam.ids[j],
                "vertices": fam.members[j].iter().map(|v| v + 1).collect::<Vec<_>>(),
                "weight": fam.weights.ratio(j).to_string(),
            })
        })
        .collect();
    serde_json::to_string(&arr).expect("serializable")
}

/// `G°[ℋ]`: members adjacent when they share a vertex or a `G`-edge joins them.
pub fn blob_graph(g: &Graph, members: &[VertexSet]) -> Graph {
    let closed: Vec<VertexSet> = members.iter().map(|h| g.closed_neighborhood(h)).collect();
    let mut edges = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if closed[i].intersects(&members[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_lossy(members.len(), edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingMode {
    Independent,
    Distance(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingViolation {
    pub first: usize,
    pub second: usize,
    pub reason: String,
}

/// Checks every chosen pair: vertex-disjoint and non-adjacent, or at distance at least `d`.
pub fn is_valid_packing(g: &Graph, members: &[VertexSet], chosen: &[usize], mode: PackingMode) -> std::result::Result<(), PackingViolation> {
    let d = match mode {
        PackingMode::Independent => 2,
        PackingMode::Distance(d) => d,
    };
    for (x, &i) in chosen.iter().enumerate() {
        let ball = g.ball(&members[i], d.saturating_sub(1));
        for &j in &chosen[x + 1..] {
            if i == j || members[i].intersects(&members[j]) {
                return Err(PackingViolation { first: i, second: j, reason: "members share a vertex".into() });
            }
            if d >= 1 && ball.intersects(&members[j]) {
                return Err(PackingViolation { first: i, second: j, reason: format!("members are closer than {d}") });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingSolution {
    /// Indices into the input family, ascending.
    pub chosen: Vec<usize>,
    /// Scaled by the family weight map's denominator.
    pub weight: i128,
    pub blob_vertices: usize,
    pub blob_edges: usize,
}

/// Heaviest independent packing, solved as MWIS on the blob graph (`k ≥ μ(𝒯)`).
pub fn max_weight_independent_packing(g: &Graph, td: &TreeDecomposition, fam: &SubgraphFamily, k: usize) -> Result<PackingSolution> {
    let (uniq, back) = fam.dedup();
    let blob = blob_graph(g, &uniq.members);
    let btd = blob_decomposition(g, td, &uniq.members)?;
    let nice = make_nice(&blob, &btd)?;
    let sol = mwis_dp(&blob, &nice, &uniq.weights, k)?;
    let chosen: Vec<usize> = sol.set.iter().map(|j| back[j]).collect();
    if let Err(v) = is_valid_packing(g, &fam.members, &chosen, PackingMode::Independent) {
        return Err(Error::Invariant(format!("packing check failed: {} / {}: {}", v.first, v.second, v.reason)));
    }
    Ok(PackingSolution { chosen, weight: sol.weight, blob_vertices: blob.n(), blob_edges: blob.m() })
}

/// Heaviest packing with pairwise distance at least `d` (even): independent packing in `G^(d-1)`.
pub fn max_weight_distance_d_packing(g: &Graph, td: &TreeDecomposition, fam: &SubgraphFamily, d: usize, k: usize) -> Result<PackingSolution> {
    if d < 2 || d % 2 == 1 {
        return Err(Error::input(format!(
            "distance {d} unsupported: only even d >= 2 (odd d is NP-hard already on chordal graphs)"
        )));
    }
    if d == 2 {
        return max_weight_independent_packing(g, td, fam, k);
    }
    let gp = graph_power(g, d - 1)?;
    let tdp = odd_power_decomposition(g, td, d - 1)?;
    let mut sol = max_weight_independent_packing(&gp, &tdp, fam, k)?;
    if let Err(v) = is_valid_packing(g, &fam.members, &sol.chosen, PackingMode::Distance(d)) {
        return Err(Error::Invariant(format!("distance packing check failed: {} / {}: {}", v.first, v.second, v.reason)));
    }
    sol.chosen.sort_unstable();
    Ok(sol)
}

/// Connected vertex sets of size at most `c` satisfying `pred`, each once, sorted.
pub fn enumerate_small_connected_subgraphs(
    g: &Graph,
    c: usize,
    pred: &dyn Fn(&VertexSet) -> bool,
    cap: usize,
) -> Result<Vec<VertexSet>> {
    // extension-set enumeration: grow from the minimum vertex, only adding exclusive neighbors
    fn extend(g: &Graph, root: usize, sub: &mut VertexSet, ext: VertexSet, c: usize, out: &mut Vec<VertexSet>, pred: &dyn Fn(&VertexSet) -> bool, cap: usize) -> Result<()> {
        if pred(sub) {
            out.push(sub.clone());
            if out.len() > cap {
                return Err(Error::resource("connected subgraphs", cap as u64, out.len() as u64));
            }
        }
        if sub.len() == c {
            return Ok(());
        }
        let closed = g.closed_neighborhood(sub);
        let mut ext = ext;
        while let Some(w) = ext.first() {
            ext.remove(w);
            let mut next = ext.clone();
            for u in g.nbr_set(w).difference(&closed) {
                if u > root {
                    next.insert(u);
                }
            }
            sub.insert(w);
            extend(g, root, sub, next, c, out, pred, cap)?;
            sub.remove(w);
        }
        Ok(())
    }
    let mut out = Vec::new();
    if c == 0 {
        return Ok(out);
    }
    for v in 0..g.n() {
        let ext: VertexSet = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        extend(g, v, &mut VertexSet::singleton(v), ext, c, &mut out, pred, cap)?;
    }
    out.sort();
    Ok(out)
}

/// Component size used by the approximation scheme: `⌈2(r+1)/ε⌉`.
pub fn ptas_component_size(r: usize, eps: Ratio) -> usize {
    let num = 2 * (r as i128 + 1) * eps.den;
    (num.div_euclid(eps.num) + i128::from(num % eps.num != 0)) as usize
}

/// Whether `G[S]` has treewidth at most `r`.
pub fn has_treewidth_at_most(g: &Graph, s: &VertexSet, r: usize) -> Result<bool> {
    match r {
        0 => Ok(g.edges_within(s) == 0),
        1 => Ok(g.induces_forest(s)),
        _ => {
            let (h, _) = induced_subgraph(g, s)?;
            if h.n() <= r + 1 {
                return Ok(true);
            }
            Ok(exact_width_parameters_capped(&h, 20)?.treewidth <= r)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PtasSolution {
    pub set: VertexSet,
    pub component_size: usize,
    pub family_size: usize,
}

/// Induced subgraph of treewidth at most `r` with at least `(1-ε)` times the optimum size:
/// the best packing of connected pieces with at most `c(ε)` vertices and treewidth at most `r`.
pub fn ptas_bounded_treewidth_subgraph(g: &Graph, td: &TreeDecomposition, r: usize, eps: Ratio, k: usize) -> Result<PtasSolution> {
    if eps.num == 0 || eps.num >= eps.den {
        return Err(Error::input(format!("epsilon {eps} must lie strictly between 0 and 1")));
    }
    let c = ptas_component_size(r, eps);
    let pieces = enumerate_small_connected_subgraphs(
        g,
        c,
        &|s| has_treewidth_at_most(g, s, r).unwrap_or(false),
        DEFAULT_SUBGRAPH_CAP,
    )?;
    let sizes: Vec<i128> = pieces.iter().map(|p| p.len() as i128).collect();
    let fam = SubgraphFamily::new(g, (0..pieces.len() as i64).collect(), pieces, WeightMap::from_integers(&sizes)?)?;
    let sol = max_weight_independent_packing(g, td, &fam, k)?;
    let mut set = VertexSet::new();
    for &j in &sol.chosen {
        set.union_with(&fam.members[j]);
    }
    for comp in g.components_of(&set) {
        if comp.len() > c || !has_treewidth_at_most(g, &comp, r)? {
            return Err(Error::Invariant(format!("component {comp:?} breaks the size or treewidth limit")));
        }
    }
    Ok(PtasSolution { set, component_size: c, family_size: fam.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn blob_examples() {
        let g = path(3);
        let singles: Vec<VertexSet> = (0..3).map(VertexSet::singleton).collect();
        assert_eq!(blob_graph(&g, &singles), g);
        assert_eq!(blob_graph(&g, &[vs(&[0]), vs(&[2])]), Graph::edgeless(2));
        let k = complete_bipartite(2, 2);
        let doubled: Vec<VertexSet> = (0..4).flat_map(|v| [VertexSet::singleton(v), VertexSet::singleton(v)]).collect();
        let b = blob_graph(&k, &doubled);
        // copies of one vertex form the matching edges; K_{2,2} cross edges join everything across
        assert_eq!(b.m(), 4 + 16);
    }

    #[test]
    fn packings_on_p5() {
        let g = path(5);
        let td = TreeDecomposition::path_of((0..4).map(|i| vs(&[i, i + 1])).collect());
        let fam = SubgraphFamily::singletons(&g, &WeightMap::unit(5));
        assert_eq!(max_weight_distance_d_packing(&g, &td, &fam, 2, 1).unwrap().chosen.len(), 3);
        let four = max_weight_distance_d_packing(&g, &td, &fam, 4, 1).unwrap();
        assert_eq!(four.chosen, vec![0, 4]);
        assert!(max_weight_distance_d_packing(&g, &td, &fam, 3, 1).is_err());
        let one = SubgraphFamily::unit(&g, vec![vs(&[1, 2])]).unwrap();
        assert_eq!(max_weight_independent_packing(&g, &td, &one, 1).unwrap().chosen, vec![0]);
    }

    #[test]
    fn validity_checks() {
        let g = path(4);
        let m = vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[3])];
        assert!(is_valid_packing(&g, &m, &[], PackingMode::Independent).is_ok());
        assert_eq!(is_valid_packing(&g, &m, &[0, 1], PackingMode::Independent).unwrap_err().reason, "members share a vertex");
        assert!(is_valid_packing(&g, &m, &[0, 2], PackingMode::Independent).is_ok());
        assert!(is_valid_packing(&g, &m, &[0, 2], PackingMode::Distance(2)).is_ok());
        assert!(is_valid_packing(&g, &m, &[0, 2], PackingMode::Distance(3)).is_err());
        assert!(SubgraphFamily::unit(&g, vec![vs(&[0, 2])]).is_err());
    }

    #[test]
    fn connected_sets() {
        let g = path(3);
        let all = enumerate_small_connected_subgraphs(&g, 2, &|_| true, 100).unwrap();
        assert_eq!(all, vec![vs(&[0]), vs(&[0, 1]), vs(&[1]), vs(&[1, 2]), vs(&[2])]);
        assert_eq!(enumerate_small_connected_subgraphs(&cycle(6), 1, &|_| true, 100).unwrap().len(), 6);
    }

    #[test]
    fn json_roundtrip() {
        let g = path(3);
        let fam = parse_family_json(r#"[{"id": 7, "vertices": [1, 2], "weight": "3/2"}, {"id": 9, "vertices": [3]}]"#, &g).unwrap();
        assert_eq!(fam.members, vec![vs(&[0, 1]), vs(&[2])]);
        assert_eq!(write_family_json(&fam), r#"[{"id":7,"vertices":[1,2],"weight":"3/2"},{"id":9,"vertices":[3],"weight":"1"}]"#);
        assert!(parse_family_json(r#"[{"id": 1, "vertices": [1, 3]}]"#, &g).is_err());
    }

    #[test]
    fn component_size_formula() {
        assert_eq!(ptas_component_size(1, "1/4".parse().unwrap()), 16);
        assert_eq!(ptas_component_size(1, "1/2".parse().unwrap()), 8);
        assert_eq!(ptas_component_size(0, "2/3".parse().unwrap()), 3);
    }
}
