//! Maximal independent set enumeration, bag trace families, and the MWIS
//! dynamic program restricted to those families.

use crate::decomp::{NiceTreeDecomposition, NodeKind, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::{pow_f64, DetMap};
use crate::vertex_set::VertexSet;
use crate::weights::WeightMap;
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_MIS_CAP: usize = 1_000_000;
pub const DEFAULT_STATE_CAP: usize = 50_000_000;

/// Maximal independent sets of `G[cand]`, sorted.
///
/// Bron–Kerbosch on the complement with pivoting; the pivot maximizes the number of
/// candidates it is non-adjacent to, ties going to the lowest id.
pub fn maximal_independent_sets_in(g: &Graph, cand: &VertexSet, cap: usize) -> Result<Vec<VertexSet>> {
    fn go(
        g: &Graph,
        r: &mut VertexSet,
        p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
                if out.len() > cap {
                    return Err(Error::resource("maximal independent sets", cap as u64, out.len() as u64));
                }
            }
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.len() - p.intersection_len(g.nbr_set(u)) - usize::from(p.contains(u)), std::cmp::Reverse(u)))
            .unwrap();
        // branch on P ∩ N[pivot]
        let mut branch = p.intersection(g.nbr_set(pivot));
        if p.contains(pivot) {
            branch.insert(pivot);
        }
        let mut p = p;
        for v in branch {
            let mut closed = g.nbr_set(v).clone();
            closed.insert(v);
            r.insert(v);
            go(g, r, p.difference(&closed), x.difference(&closed), out, cap)?;
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(g, &mut VertexSet::new(), cand.clone(), VertexSet::new(), &mut out, cap)?;
    out.sort();
    Ok(out)
}

pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_independent_sets_in(g, &g.vertices(), DEFAULT_MIS_CAP)
}

/// Candidate traces `J = J' \ N(Q)` of maximal independent sets on one bag.
#[derive(Clone, Debug, Serialize)]
pub struct TraceFamily {
    pub node: usize,
    /// Sorted, duplicate-free.
    pub members: Vec<VertexSet>,
    /// For each member, the first `(J', Q)` that produced it.
    pub witnesses: Vec<(VertexSet, VertexSet)>,
    pub k: usize,
}

impl TraceFamily {
    pub fn contains(&self, j: &VertexSet) -> bool {
        self.members.binary_search(j).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `{ J' \ N(Q) : J' maximal independent in G[X_t], Q ⊆ N(X_t), |Q| ≤ k }`.
///
/// Only the sets `N(q) ∩ J'` matter, so `Q` ranges over at most `k` distinct such shadows.
pub fn bag_trace_family(g: &Graph, bag: &VertexSet, node: usize, k: usize) -> Result<TraceFamily> {
    let outer = g.neighborhood(bag);
    let mis = maximal_independent_sets_in(g, bag, DEFAULT_MIS_CAP)?;
    let alekseev = pow_f64(bag.len(), 2 * k).max(1.0);
    if mis.len() as f64 > alekseev {
        log::warn!(
            "bag {node}: {} maximal independent sets exceed |X_t|^(2k) = {alekseev}; induced matchings touching it are larger than k = {k}",
            mis.len()
        );
    }
    let mut found: DetMap<VertexSet, (VertexSet, VertexSet)> = DetMap::default();
    for jp in &mis {
        // distinct nonempty shadows, each with its lowest q
        let mut shadows: Vec<(VertexSet, usize)> = Vec::new();
        for q in &outer {
            let sh = g.nbr_set(q).intersection(jp);
            if !sh.is_empty() && !shadows.iter().any(|(s, _)| *s == sh) {
                shadows.push((sh, q));
            }
        }
        let mut pick = Vec::new();
        choose_shadows(&shadows, 0, k, &mut pick, &mut |chosen: &[usize]| {
            let mut j = jp.clone();
            let mut q = VertexSet::new();
            for &i in chosen {
                j.difference_with(&shadows[i].0);
                q.insert(shadows[i].1);
            }
            found.entry(j).or_insert_with(|| (jp.clone(), q));
        });
    }
    let mut entries: Vec<(VertexSet, (VertexSet, VertexSet))> = found.into_iter().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let bound = pow_f64(g.n(), 3 * k);
    if entries.len() as f64 > bound {
        return Err(Error::Invariant(format!("trace family at node {node} has {} members, above n^(3k) = {bound}", entries.len())));
    }
    let (members, witnesses) = entries.into_iter().unzip();
    Ok(TraceFamily { node, members, witnesses, k })
}

fn choose_shadows(shadows: &[(VertexSet, usize)], from: usize, left: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    f(pick);
    if left == 0 {
        return;
    }
    for i in from..shadows.len() {
        pick.push(i);
        choose_shadows(shadows, i + 1, left - 1, pick, f);
        pick.pop();
    }
}

/// Trace families for every node of a decomposition, computed in parallel.
pub fn trace_families(g: &Graph, td: &TreeDecomposition, k: usize) -> Result<Vec<TraceFamily>> {
    (0..td.len()).into_par_iter().map(|t| bag_trace_family(g, td.bag(t), t, k)).collect()
}

#[derive(Clone, Debug)]
enum Back {
    Start,
    From(VertexSet),
    Pair(VertexSet, VertexSet),
}

/// Result of a decomposition DP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DpSolution {
    /// Scaled by the weight map's denominator.
    pub weight: i128,
    pub set: VertexSet,
    pub family_sizes: Vec<usize>,
    pub table_sizes: Vec<usize>,
}

/// Maximum weight independent set by DP over trace families (`k ≥ μ(𝒯)`).
pub fn mwis_dp(g: &Graph, nice: &NiceTreeDecomposition, w: &WeightMap, k: usize) -> Result<DpSolution> {
    let fams = trace_families(g, nice.td(), k)?;
    mwis_dp_with(g, nice, w, &fams, DEFAULT_STATE_CAP)
}

pub fn mwis_dp_with(
    g: &Graph,
    nice: &NiceTreeDecomposition,
    w: &WeightMap,
    fams: &[TraceFamily],
    state_cap: usize,
) -> Result<DpSolution> {
    let mut tables: Vec<DetMap<VertexSet, (i128, Back)>> = vec![DetMap::default(); nice.len()];
    let mut total = 0usize;
    for &t in nice.postorder() {
        let fam = &fams[t];
        let mut tab: DetMap<VertexSet, (i128, Back)> = DetMap::default();
        let offer = |j: VertexSet, val: i128, back: Back, tab: &mut DetMap<VertexSet, (i128, Back)>| {
            if !fam.contains(&j) {
                return;
            }
            match tab.get(&j) {
                Some((old, _)) if *old >= val => {}
                _ => {
                    tab.insert(j, (val, back));
                }
            }
        };
        let sorted = |tab: &DetMap<VertexSet, (i128, Back)>| {
            let mut v: Vec<(VertexSet, i128)> = tab.iter().map(|(j, (x, _))| (j.clone(), *x)).collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            v
        };
        match nice.kind(t) {
            NodeKind::Leaf => offer(VertexSet::new(), 0, Back::Start, &mut tab),
            NodeKind::Introduce(v) => {
                let c = nice.children(t)[0];
                for (j, val) in sorted(&tables[c]) {
                    offer(j.clone(), val, Back::From(j.clone()), &mut tab);
                    if !g.nbr_set(v).intersects(&j) {
                        let mut jv = j.clone();
                        jv.insert(v);
                        offer(jv, val + w.get(v), Back::From(j), &mut tab);
                    }
                }
            }
            NodeKind::Forget(v) => {
                let c = nice.children(t)[0];
                for (j, val) in sorted(&tables[c]) {
                    let mut jf = j.clone();
                    jf.remove(v);
                    offer(jf, val, Back::From(j), &mut tab);
                }
            }
            NodeKind::Join => {
                let (a, b) = (nice.children(t)[0], nice.children(t)[1]);
                for (j, va) in sorted(&tables[a]) {
                    if let Some((vb, _)) = tables[b].get(&j) {
                        let val = va + vb - w.of(&j);
                        offer(j.clone(), val, Back::Pair(j.clone(), j), &mut tab);
                    }
                }
            }
        }
        debug_assert!(tab.keys().all(|j| g.is_independent(j)));
        total += tab.len();
        if total > state_cap {
            return Err(Error::resource("MWIS DP states", state_cap as u64, total as u64));
        }
        tables[t] = tab;
    }
    let root = nice.root();
    let (weight, _) = tables[root]
        .get(&VertexSet::new())
        .map(|(x, b)| (*x, b.clone()))
        .ok_or_else(|| Error::Invariant("root table lacks the empty state".into()))?;
    // walk back-pointers, collecting every state's vertices
    let mut set = VertexSet::new();
    let mut stack = vec![(root, VertexSet::new())];
    while let Some((t, j)) = stack.pop() {
        set.union_with(&j);
        match &tables[t][&j].1 {
            Back::Start => {}
            Back::From(c) => stack.push((nice.children(t)[0], c.clone())),
            Back::Pair(a, b) => {
                stack.push((nice.children(t)[0], a.clone()));
                stack.push((nice.children(t)[1], b.clone()));
            }
        }
    }
    if !g.is_independent(&set) || w.of(&set) != weight {
        return Err(Error::Invariant("reconstructed MWIS solution is inconsistent".into()));
    }
    Ok(DpSolution {
        weight,
        set,
        family_sizes: fams.iter().map(TraceFamily::len).collect(),
        table_sizes: tables.iter().map(DetMap::len).collect(),
    })
}
