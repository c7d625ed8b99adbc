use super::family::{signature_family_exhaustive, signature_family_bounded, BoundedOptions, SignatureFamily};
use super::signature::{merge_partitions, oplus, ForestSignature};
use crate::decomp::{NiceTreeDecomposition, NodeKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis_traces::{bag_trace_family, DpSolution, DEFAULT_STATE_CAP};
use crate::util::DetMap;
use crate::vertex_set::VertexSet;
use crate::weights::WeightMap;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyProvider {
    Bounded(BoundedOptions),
    Exhaustive { cap: usize },
}

/// Signature family for every node, computed in parallel.
pub fn signature_families(g: &Graph, nice: &NiceTreeDecomposition, provider: FamilyProvider) -> Result<Vec<SignatureFamily>> {
    let vts = nice.td().subtree_vertices();
    (0..nice.len())
        .into_par_iter()
        .map(|t| match provider {
            FamilyProvider::Exhaustive { cap } => signature_family_exhaustive(g, nice.bag(t), t, cap),
            FamilyProvider::Bounded(opts) => {
                let traces = bag_trace_family(g, nice.bag(t), t, opts.k)?;
                signature_family_bounded(g, nice.bag(t), &vts[t], t, &traces, opts)
            }
        })
        .collect()
}

pub fn mwif_dp(g: &Graph, nice: &NiceTreeDecomposition, w: &WeightMap, provider: FamilyProvider) -> Result<DpSolution> {
    let fams = signature_families(g, nice, provider)?;
    mwif_dp_with(g, nice, w, &fams, DEFAULT_STATE_CAP)
}

#[derive(Clone, Debug)]
enum Back {
    Start,
    From(ForestSignature),
    Pair(ForestSignature, ForestSignature),
}

type Table = DetMap<ForestSignature, (i128, Back)>;

fn sorted_entries(tab: &Table) -> Vec<(&ForestSignature, i128)> {
    let mut v: Vec<(&ForestSignature, i128)> = tab.iter().map(|(s, (x, _))| (s, *x)).collect();
    v.sort_by(|a, b| a.0.cmp(b.0));
    v
}

/// Maximum weight induced forest by DP over the given per-node families.
///
/// Family members with a cyclic `Z` or a partition splitting an edge of `G[Z]` are never stored.
pub fn mwif_dp_with(
    g: &Graph,
    nice: &NiceTreeDecomposition,
    w: &WeightMap,
    fams: &[SignatureFamily],
    state_cap: usize,
) -> Result<DpSolution> {
    let mut tables: Vec<Table> = vec![Table::default(); nice.len()];
    let mut total = 0usize;
    for &t in nice.postorder() {
        let fam = &fams[t];
        let mut tab = Table::default();
        let offer = |sig: ForestSignature, val: i128, back: Back, tab: &mut Table| {
            if !fam.contains(&sig) {
                return;
            }
            match tab.get(&sig) {
                Some((old, _)) if *old >= val => {}
                Some(_) => {
                    tab.insert(sig, (val, back));
                }
                None => {
                    if sig.is_consistent(g) {
                        tab.insert(sig, (val, back));
                    }
                }
            }
        };
        match nice.kind(t) {
            NodeKind::Leaf => offer(ForestSignature::empty(), 0, Back::Start, &mut tab),
            NodeKind::Introduce(v) => {
                let c = nice.children(t)[0];
                for (sig, val) in sorted_entries(&tables[c]) {
                    offer(sig.clone(), val, Back::From(sig.clone()), &mut tab);
                    if let Some(next) = oplus(g, sig, v) {
                        offer(next, val + w.get(v), Back::From(sig.clone()), &mut tab);
                    }
                }
            }
            NodeKind::Forget(v) => {
                let c = nice.children(t)[0];
                for (sig, val) in sorted_entries(&tables[c]) {
                    offer(sig.without(v), val, Back::From(sig.clone()), &mut tab);
                }
            }
            NodeKind::Join => {
                let (a, b) = (nice.children(t)[0], nice.children(t)[1]);
                let mut by_z: DetMap<&VertexSet, Vec<(&ForestSignature, i128)>> = DetMap::default();
                for (sig, val) in sorted_entries(&tables[b]) {
                    by_z.entry(&sig.z).or_default().push((sig, val));
                }
                let mut comps_cache: DetMap<&VertexSet, Vec<VertexSet>> = DetMap::default();
                for (sa, va) in sorted_entries(&tables[a]) {
                    let Some(partners) = by_z.get(&sa.z) else { continue };
                    let comps = comps_cache.entry(&sa.z).or_insert_with(|| g.components_of(&sa.z));
                    for &(sb, vb) in partners {
                        if let Some(blocks) = merge_partitions(comps, &sa.blocks, &sb.blocks) {
                            let val = va + vb - w.of(&sa.z);
                            offer(ForestSignature::from_blocks(blocks), val, Back::Pair(sa.clone(), sb.clone()), &mut tab);
                        }
                    }
                }
            }
        }
        total += tab.len();
        if total > state_cap {
            return Err(Error::resource("forest DP states", state_cap as u64, total as u64));
        }
        tables[t] = tab;
    }
    let root = nice.root();
    let weight = tables[root]
        .get(&ForestSignature::empty())
        .map(|(x, _)| *x)
        .ok_or_else(|| Error::Invariant("root table lacks the empty signature".into()))?;
    let mut set = VertexSet::new();
    let mut stack = vec![(root, ForestSignature::empty())];
    while let Some((t, sig)) = stack.pop() {
        set.union_with(&sig.z);
        match &tables[t][&sig].1 {
            Back::Start => {}
            Back::From(c) => stack.push((nice.children(t)[0], c.clone())),
            Back::Pair(a, b) => {
                stack.push((nice.children(t)[0], a.clone()));
                stack.push((nice.children(t)[1], b.clone()));
            }
        }
    }
    if !g.induces_forest(&set) || w.of(&set) != weight {
        return Err(Error::Invariant("reconstructed forest is cyclic or has the wrong weight".into()));
    }
    Ok(DpSolution {
        weight,
        set,
        family_sizes: fams.iter().map(SignatureFamily::len).collect(),
        table_sizes: tables.iter().map(DetMap::len).collect(),
    })
}
