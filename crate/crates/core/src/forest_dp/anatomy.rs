use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// Skeleton / leaves / trivial split of an induced forest.
///
/// In a `K₂` component the lower id goes to the skeleton and the higher id to the leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestAnatomy {
    pub skeleton: VertexSet,
    pub leaves: VertexSet,
    pub trivial: VertexSet,
}

impl ForestAnatomy {
    /// Leaves plus trivial vertices.
    pub fn limbs(&self) -> VertexSet {
        self.leaves.union(&self.trivial)
    }
}

pub fn forest_anatomy(g: &Graph, f: &VertexSet) -> Result<ForestAnatomy> {
    if let Some(c) = g.find_cycle_in(f) {
        return Err(Error::input(format!("vertex set is not a forest; cycle {c:?}")));
    }
    let mut a = ForestAnatomy { skeleton: VertexSet::new(), leaves: VertexSet::new(), trivial: VertexSet::new() };
    for v in f {
        let nf = g.nbr_set(v).intersection(f);
        match nf.len() {
            0 => a.trivial.insert(v),
            1 => {
                let u = nf.first().unwrap();
                let k2 = g.nbr_set(u).intersection_len(f) == 1;
                if k2 && v < u {
                    a.skeleton.insert(v)
                } else {
                    a.leaves.insert(v)
                }
            }
            _ => a.skeleton.insert(v),
        };
    }
    Ok(a)
}
