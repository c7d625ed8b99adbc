use super::{ramsey_upper, BipartiteAlgebra, BoundariedGraph, ForestAlgebra, Label, MaxDegreeAlgebra, TypeAlgebra};
use crate::decomp::{NiceTreeDecomposition, NodeKind};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};
use crate::util::DetMap;
use crate::vertex_set::VertexSet;
use crate::weights::WeightMap;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_STRUCTURED_STATE_CAP: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuredSolution {
    /// Scaled by the weight map's denominator.
    pub weight: i128,
    pub set: VertexSet,
    pub ell: usize,
    pub table_sizes: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinProperty {
    Forest,
    Bipartite,
    MaxDegree(usize),
}

impl FromStr for BuiltinProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forest" => Ok(BuiltinProperty::Forest),
            "bipartite" => Ok(BuiltinProperty::Bipartite),
            _ => s
                .strip_prefix("max-degree:")
                .and_then(|d| d.parse().ok())
                .map(BuiltinProperty::MaxDegree)
                .ok_or_else(|| Error::input(format!("unknown property {s:?}; expected forest, bipartite or max-degree:<d>"))),
        }
    }
}

impl fmt::Display for BuiltinProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinProperty::Forest => write!(f, "forest"),
            BuiltinProperty::Bipartite => write!(f, "bipartite"),
            BuiltinProperty::MaxDegree(d) => write!(f, "max-degree:{d}"),
        }
    }
}

pub fn solve_builtin(g: &Graph, nice: &NiceTreeDecomposition, w: &WeightMap, prop: BuiltinProperty, r: usize, k: usize) -> Result<StructuredSolution> {
    match prop {
        BuiltinProperty::Forest => generic_structured_dp(g, nice, w, &ForestAlgebra, r, k),
        BuiltinProperty::Bipartite => generic_structured_dp(g, nice, w, &BipartiteAlgebra, r, k),
        BuiltinProperty::MaxDegree(d) => generic_structured_dp(g, nice, w, &MaxDegreeAlgebra { d }, r, k),
    }
}

/// Maximum weight `F` with `ω(G[F]) ≤ r` whose induced subgraph the algebra accepts,
/// assuming every bag has independence number at most `k`.
pub fn generic_structured_dp<A: TypeAlgebra>(g: &Graph, nice: &NiceTreeDecomposition, w: &WeightMap, alg: &A, r: usize, k: usize) -> Result<StructuredSolution> {
    generic_structured_dp_capped(g, nice, w, alg, r, k, DEFAULT_STRUCTURED_STATE_CAP)
}

#[derive(Clone, Copy)]
enum Back {
    Start,
    From(usize),
    Pair(usize, usize),
}

struct Table<T> {
    rows: Vec<(VertexSet, T, i128, Back)>,
    index: DetMap<(VertexSet, T), usize>,
}

impl<T: Clone + Eq + std::hash::Hash> Table<T> {
    fn new() -> Self {
        Table { rows: Vec::new(), index: DetMap::default() }
    }

    fn offer(&mut self, s: VertexSet, t: T, val: i128, back: Back) {
        match self.index.get(&(s.clone(), t.clone())) {
            Some(&i) => {
                if self.rows[i].2 < val {
                    self.rows[i].2 = val;
                    self.rows[i].3 = back;
                }
            }
            None => {
                self.index.insert((s.clone(), t.clone()), self.rows.len());
                self.rows.push((s, t, val, back));
            }
        }
    }
}

/// Label of `v` when the vertices of `s` are numbered by rank from 1.
fn rank(s: &VertexSet, v: usize) -> Label {
    (s.iter().take_while(|&u| u < v).count() + 1) as Label
}

fn has_clique(g: &Graph, cand: &VertexSet, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if cand.len() < size {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        if has_clique(g, &rest.intersection(g.nbr_set(v)), size - 1) {
            return true;
        }
    }
    false
}

pub fn clique_number_at_most(g: &Graph, s: &VertexSet, r: usize) -> bool {
    !has_clique(g, s, r + 1)
}

pub fn generic_structured_dp_capped<A: TypeAlgebra>(
    g: &Graph,
    nice: &NiceTreeDecomposition,
    w: &WeightMap,
    alg: &A,
    r: usize,
    k: usize,
    state_cap: usize,
) -> Result<StructuredSolution> {
    let ell = ramsey_upper(k + 1, r + 1);
    if ell > Label::MAX as u64 {
        return Err(Error::resource("boundary labels", Label::MAX as u64, ell));
    }
    let ell = ell as usize;
    let mut base: DetMap<VertexSet, A::Type> = DetMap::default();
    let mut type_of_bag = |s: &VertexSet| -> Result<A::Type> {
        if let Some(t) = base.get(s) {
            return Ok(t.clone());
        }
        let (h, _) = induced_subgraph(g, s)?;
        let labels = (1..=s.len() as Label).map(Some).collect();
        let t = alg.type_of(&BoundariedGraph::new(h, labels, ell)?);
        base.insert(s.clone(), t.clone());
        Ok(t)
    };
    let mut tables: Vec<Table<A::Type>> = (0..nice.len()).map(|_| Table::new()).collect();
    let mut total = 0usize;
    for &t in nice.postorder() {
        let mut tab = Table::new();
        match nice.kind(t) {
            NodeKind::Leaf => {
                let empty = type_of_bag(&VertexSet::new())?;
                tab.offer(VertexSet::new(), empty, 0, Back::Start);
            }
            NodeKind::Introduce(v) => {
                let c = nice.children(t)[0];
                for (i, (s, ty, val, _)) in tables[c].rows.iter().enumerate() {
                    tab.offer(s.clone(), ty.clone(), *val, Back::From(i));
                    if s.len() + 1 > ell || r == 0 || has_clique(g, &s.intersection(g.nbr_set(v)), r) {
                        continue;
                    }
                    let mut sv = s.clone();
                    sv.insert(v);
                    let p = rank(&sv, v);
                    let shifted = alg.relabel(ty, &|l| if l >= p { l + 1 } else { l });
                    let glued = alg.glue(&type_of_bag(&sv)?, &shifted);
                    if !alg.is_dead(&glued) {
                        tab.offer(sv, glued, val + w.get(v), Back::From(i));
                    }
                }
            }
            NodeKind::Forget(v) => {
                let c = nice.children(t)[0];
                for (i, (s, ty, val, _)) in tables[c].rows.iter().enumerate() {
                    if !s.contains(v) {
                        tab.offer(s.clone(), ty.clone(), *val, Back::From(i));
                        continue;
                    }
                    let p = rank(s, v);
                    let dropped = alg.relabel(&alg.forget(ty, p), &|l| if l > p { l - 1 } else { l });
                    if !alg.is_dead(&dropped) {
                        let mut sf = s.clone();
                        sf.remove(v);
                        tab.offer(sf, dropped, *val, Back::From(i));
                    }
                }
            }
            NodeKind::Join => {
                let (a, b) = (nice.children(t)[0], nice.children(t)[1]);
                let mut by_set: DetMap<&VertexSet, Vec<usize>> = DetMap::default();
                for (j, row) in tables[b].rows.iter().enumerate() {
                    by_set.entry(&row.0).or_default().push(j);
                }
                for (i, (s, ta, va, _)) in tables[a].rows.iter().enumerate() {
                    for &j in by_set.get(s).map(Vec::as_slice).unwrap_or(&[]) {
                        let (_, tb, vb, _) = &tables[b].rows[j];
                        let glued = alg.glue(ta, tb);
                        if !alg.is_dead(&glued) {
                            tab.offer(s.clone(), glued, va + vb - w.of(s), Back::Pair(i, j));
                        }
                    }
                }
            }
        }
        total += tab.rows.len();
        if total > state_cap {
            return Err(Error::resource("structured DP states", state_cap as u64, total as u64));
        }
        tables[t] = tab;
    }
    let root = nice.root();
    let best = tables[root]
        .rows
        .iter()
        .enumerate()
        .filter(|(_, row)| row.0.is_empty() && alg.accepting(&row.1))
        .max_by(|x, y| x.1 .2.cmp(&y.1 .2).then(y.0.cmp(&x.0)))
        .map(|(i, row)| (i, row.2));
    let Some((start, weight)) = best else {
        return Err(Error::Infeasible(format!("no induced subgraph satisfies {} with clique number at most {r}", alg.name())));
    };
    let mut set = VertexSet::new();
    let mut stack = vec![(root, start)];
    while let Some((t, i)) = stack.pop() {
        let row = &tables[t].rows[i];
        if row.0.len() > ell {
            return Err(Error::Invariant(format!("bag {t} holds {} solution vertices, above {ell}", row.0.len())));
        }
        set.union_with(&row.0);
        match row.3 {
            Back::Start => {}
            Back::From(c) => stack.push((nice.children(t)[0], c)),
            Back::Pair(a, b) => {
                stack.push((nice.children(t)[0], a));
                stack.push((nice.children(t)[1], b));
            }
        }
    }
    for t in 0..nice.len() {
        if nice.bag(t).intersection_len(&set) > ell {
            return Err(Error::Invariant(format!("bag {t} meets the solution in more than {ell} vertices")));
        }
    }
    if w.of(&set) != weight || !alg.holds(g, &set) || !clique_number_at_most(g, &set, r) {
        return Err(Error::Invariant("reconstructed structured solution is inconsistent".into()));
    }
    Ok(StructuredSolution { weight, set, ell, table_sizes: tables.iter().map(|t| t.rows.len()).collect() })
}
