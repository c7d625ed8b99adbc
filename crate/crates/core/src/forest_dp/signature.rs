use crate::decomp::TreeDecomposition;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// `(Z, π)`: the bag part of a forest and how its subtree part connects it.
///
/// Blocks are nonempty and sorted by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ForestSignature {
    pub z: VertexSet,
    pub blocks: Vec<VertexSet>,
}

impl ForestSignature {
    pub fn empty() -> Self {
        ForestSignature { z: VertexSet::new(), blocks: Vec::new() }
    }

    pub fn from_blocks(mut blocks: Vec<VertexSet>) -> Self {
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.first());
        let mut z = VertexSet::new();
        for b in &blocks {
            debug_assert!(b.is_disjoint(&z), "blocks overlap");
            z.union_with(b);
        }
        ForestSignature { z, blocks }
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// `Z` induces a forest and adjacent `Z`-vertices share a block.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        g.induces_forest(&self.z) && respects_components(g, &self.blocks)
    }

    /// Drops `v` (forget step); empty blocks vanish.
    pub fn without(&self, v: usize) -> ForestSignature {
        let mut blocks = self.blocks.clone();
        for b in &mut blocks {
            b.remove(v);
        }
        ForestSignature::from_blocks(blocks)
    }
}

/// No `G`-edge runs between two different blocks.
pub fn respects_components(g: &Graph, blocks: &[VertexSet]) -> bool {
    let z = blocks.iter().fold(VertexSet::new(), |acc, b| acc.union(b));
    blocks.iter().all(|b| b.iter().all(|v| g.nbr_set(v).intersection(&z).is_subset(b)))
}

/// `π' ⊕ v` when `π'` is `v`-good (every neighbor of `v` in a different block), else `None`.
pub fn oplus(g: &Graph, sig: &ForestSignature, v: usize) -> Option<ForestSignature> {
    let nv = g.nbr_set(v);
    let mut merged = VertexSet::singleton(v);
    let mut rest = Vec::with_capacity(sig.blocks.len());
    for b in &sig.blocks {
        match b.intersection_len(nv) {
            0 => rest.push(b.clone()),
            1 => merged.union_with(b),
            _ => return None,
        }
    }
    rest.push(merged);
    Some(ForestSignature::from_blocks(rest))
}

/// Combines two partitions of the same `Z` that both respect the components of `G[Z]`.
///
/// Build a bipartite multigraph with one node per block of each partition and one edge per
/// component of `G[Z]` joining the two blocks holding it. The union of the underlying forests
/// is acyclic iff this multigraph is a forest; its components give the merged blocks.
pub fn merge_partitions(comps: &[VertexSet], a: &[VertexSet], b: &[VertexSet]) -> Option<Vec<VertexSet>> {
    let mut parent: Vec<usize> = (0..a.len() + b.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut ends = Vec::with_capacity(comps.len());
    for c in comps {
        let v = c.first()?;
        let i = a.iter().position(|blk| blk.contains(v))?;
        let j = a.len() + b.iter().position(|blk| blk.contains(v))?;
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            return None;
        }
        parent[ri] = rj;
        ends.push(i);
    }
    let mut groups: Vec<(usize, VertexSet)> = Vec::new();
    for (c, &i) in comps.iter().zip(&ends) {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, blk)) => blk.union_with(c),
            None => groups.push((r, c.clone())),
        }
    }
    Some(groups.into_iter().map(|(_, b)| b).collect())
}

/// Signature of forest `f` at a node with bag `bag` and subtree vertex set `vt`.
pub fn signature_of_in(g: &Graph, bag: &VertexSet, vt: &VertexSet, f: &VertexSet) -> ForestSignature {
    let z = f.intersection(bag);
    let inside = f.intersection(vt);
    let comps = g.components_of(&inside);
    ForestSignature::from_blocks(comps.iter().map(|c| c.intersection(&z)).collect())
}

pub fn signature_of(g: &Graph, td: &TreeDecomposition, t: usize, f: &VertexSet) -> ForestSignature {
    let vt = &td.subtree_vertices()[t];
    signature_of_in(g, td.bag(t), vt, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn merge_examples() {
        let comps = vec![vs(&[0]), vs(&[1]), vs(&[2])];
        let singles = comps.clone();
        assert_eq!(merge_partitions(&comps, &singles, &singles), Some(singles.clone()));
        let two = vec![vs(&[0]), vs(&[1])];
        let joined = vec![vs(&[0, 1])];
        assert_eq!(merge_partitions(&two, &joined, &joined), None);
        let all = vec![vs(&[0, 1, 2])];
        assert_eq!(merge_partitions(&comps, &all, &singles), Some(all.clone()));
        // a path of blocks: {0,1} on one side, {1,2} on the other
        let a = vec![vs(&[0, 1]), vs(&[2])];
        let b = vec![vs(&[0]), vs(&[1, 2])];
        assert_eq!(merge_partitions(&comps, &a, &b), Some(all));
    }

    #[test]
    fn oplus_and_goodness() {
        let g = path(3);
        let sig = ForestSignature::from_blocks(vec![vs(&[0]), vs(&[2])]);
        assert_eq!(oplus(&g, &sig, 1).unwrap(), ForestSignature::from_blocks(vec![vs(&[0, 1, 2])]));
        let bad = ForestSignature::from_blocks(vec![vs(&[0, 2])]);
        assert!(oplus(&g, &bad, 1).is_none());
    }

    #[test]
    fn signatures() {
        let g = path(4);
        let td = TreeDecomposition::single_bag(&g);
        let f = vs(&[0, 1, 3]);
        assert_eq!(signature_of(&g, &td, 0, &f), ForestSignature::from_blocks(vec![vs(&[0, 1]), vs(&[3])]));
        let td2 = TreeDecomposition::path_of(vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3])]);
        assert_eq!(signature_of(&g, &td2, 2, &vs(&[0, 1])), ForestSignature::empty());
        // bag {0,1} sees 0 and 1 joined below through nothing: subtree is everything
        assert_eq!(signature_of(&g, &td2, 0, &f), ForestSignature::from_blocks(vec![vs(&[0, 1])]));
    }
}
