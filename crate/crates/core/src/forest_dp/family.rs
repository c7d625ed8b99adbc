use super::signature::ForestSignature;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis_traces::TraceFamily;
use crate::util::{pow_f64, set_partitions, DetMap, DetSet};
use crate::vertex_set::VertexSet;
use serde::Serialize;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;
pub const DEFAULT_FAMILY_BUDGET: u64 = 500_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Bounded,
    Exhaustive,
}

/// Candidate signatures at one node.
#[derive(Clone, Debug)]
pub struct SignatureFamily {
    pub node: usize,
    pub members: DetSet<ForestSignature>,
    pub provenance: Provenance,
    /// Emissions before deduplication.
    pub emitted: u64,
}

impl SignatureFamily {
    pub fn contains(&self, s: &ForestSignature) -> bool {
        self.members.contains(s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sorted(&self) -> Vec<ForestSignature> {
        let mut v: Vec<ForestSignature> = self.members.iter().cloned().collect();
        v.sort();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedOptions {
    pub k: usize,
    /// Only allow `Q`-vertices inside the bag when they belong to `S`.
    pub restrict_q_to_skeleton: bool,
    pub budget: u64,
}

impl BoundedOptions {
    pub fn new(k: usize) -> Self {
        BoundedOptions { k, restrict_q_to_skeleton: false, budget: DEFAULT_FAMILY_BUDGET }
    }
}

/// `(12k)^(12k) · n^(14k+2)`.
pub fn bounded_family_bound(k: usize, n: usize) -> f64 {
    pow_f64(12 * k, 12 * k) * pow_f64(n, 14 * k + 2)
}

/// Subsets of `within` inducing a forest, with at most `max_size` vertices.
fn forest_subsets(g: &Graph, within: &VertexSet, max_size: usize) -> Vec<VertexSet> {
    fn go(g: &Graph, vs: &[usize], i: usize, cur: &mut VertexSet, max: usize, out: &mut Vec<VertexSet>) {
        if i == vs.len() {
            out.push(cur.clone());
            return;
        }
        let v = vs[i];
        if cur.len() < max {
            let nv = g.nbr_set(v).intersection(cur);
            let ok = nv.len() < 2 || g.components_of(cur).iter().all(|c| c.intersection_len(&nv) <= 1);
            if ok {
                cur.insert(v);
                go(g, vs, i + 1, cur, max, out);
                cur.remove(v);
            }
        }
        go(g, vs, i + 1, cur, max, out);
    }
    let mut out = Vec::new();
    go(g, &within.to_vec(), 0, &mut VertexSet::new(), max_size, &mut out);
    out
}

struct Sink {
    members: DetSet<ForestSignature>,
    emitted: u64,
    budget: u64,
}

impl Sink {
    fn emit(&mut self, fixed: &[VertexSet], units: &[VertexSet]) -> Result<()> {
        let mut res = Ok(());
        set_partitions(units.len(), |rgs, nb| {
            if res.is_err() {
                return;
            }
            self.emitted += 1;
            if self.emitted > self.budget {
                res = Err(Error::resource("signature family emissions", self.budget, self.emitted));
                return;
            }
            let mut blocks = vec![VertexSet::new(); nb];
            for (u, &b) in units.iter().zip(rgs) {
                blocks[b].union_with(u);
            }
            blocks.extend(fixed.iter().cloned());
            self.members.insert(ForestSignature::from_blocks(blocks));
        });
        res
    }
}

/// Every forest `Z ⊆ X_t` with every partition whose blocks are unions of components of `G[Z]`.
pub fn signature_family_exhaustive(g: &Graph, bag: &VertexSet, node: usize, cap: usize) -> Result<SignatureFamily> {
    if bag.len() > cap {
        return Err(Error::resource(format!("exhaustive family bag size at node {node}"), cap as u64, bag.len() as u64));
    }
    let mut sink = Sink { members: DetSet::default(), emitted: 0, budget: DEFAULT_FAMILY_BUDGET };
    for z in forest_subsets(g, bag, usize::MAX) {
        sink.emit(&[], &g.components_of(&z))?;
    }
    Ok(SignatureFamily { node, members: sink.members, provenance: Provenance::Exhaustive, emitted: sink.emitted })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Target {
    /// The `G[S]` component with this index.
    Atom(usize),
    /// A `Q`-vertex in `V_t \ S`.
    Free,
    /// A `Q`-vertex outside `V_t`.
    Outside,
}

struct Item {
    shadow: VertexSet,
    target: Target,
    max: usize,
}

fn choose(items: &[Item], i: usize, left: usize, mult: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if i == items.len() {
        return f(mult);
    }
    for m in 0..=items[i].max.min(left) {
        mult.push(m);
        choose(items, i + 1, left - m, mult, f)?;
        mult.pop();
    }
    Ok(())
}

/// Signatures rebuilt from guesses `(S, I, Q, π̂)`.
///
/// `S` ranges over forests in the bag with at most `8k` vertices, `I` over the trace family,
/// `Q` over sets of at most `4k` vertices of `N[X_t]`, and `π̂` over partitions of `S ∪ Q`
/// keeping adjacent `S`-vertices together. Vertices of `R = I \ S` with no `Q`-neighbor become
/// singletons, those with one join that neighbor's block (or a singleton when the neighbor is
/// outside `V_t`), the rest are dropped; then `Q \ S` is stripped.
///
/// The output only depends on `Q` through the sets `N(q) ∩ R`, whether `q` is in `S`, in
/// `V_t \ S`, or outside `V_t`, and on how often each such class is hit (two hits already make
/// every vertex of the shadow 2-dominated). Likewise only the induced coarsening of the
/// resulting units matters, so the enumeration walks classes and unit partitions instead.
/// Pairs whose `Z` is cyclic or whose partition splits an edge are not emitted.
pub fn signature_family_bounded(
    g: &Graph,
    bag: &VertexSet,
    vt: &VertexSet,
    node: usize,
    traces: &TraceFamily,
    opts: BoundedOptions,
) -> Result<SignatureFamily> {
    let k = opts.k;
    let mut sink = Sink { members: DetSet::default(), emitted: 0, budget: opts.budget };
    let mut seen_configs: DetSet<(VertexSet, Vec<VertexSet>, Vec<VertexSet>)> = DetSet::default();
    for s in forest_subsets(g, bag, 8 * k) {
        let s_comps = g.components_of(&s);
        let comp_of = |v: usize| s_comps.iter().position(|c| c.contains(v)).unwrap();
        for i_set in &traces.members {
            let r = i_set.difference(&s);
            let nr = g.neighborhood(&r);
            let mut items: Vec<Item> = Vec::new();
            let mut groups: DetMap<(VertexSet, Target), usize> = DetMap::default();
            let mut group_order = Vec::new();
            for q in &nr {
                let shadow = g.nbr_set(q).intersection(&r);
                if s.contains(q) {
                    items.push(Item { shadow, target: Target::Atom(comp_of(q)), max: 1 });
                    continue;
                }
                if opts.restrict_q_to_skeleton && bag.contains(q) {
                    continue;
                }
                let target = if vt.contains(q) { Target::Free } else { Target::Outside };
                let key = (shadow, target);
                let c = groups.entry(key.clone()).or_insert(0);
                if *c == 0 {
                    group_order.push(key);
                }
                *c += 1;
            }
            for key in group_order {
                let max = groups[&key].min(2);
                items.push(Item { shadow: key.0, target: key.1, max });
            }
            let r_list = r.to_vec();
            choose(&items, 0, 4 * k, &mut Vec::with_capacity(items.len()), &mut |mult| {
                let mut units: Vec<VertexSet> = s_comps.clone();
                let mut free_unit: Vec<Option<usize>> = vec![None; items.len()];
                let mut fixed: Vec<VertexSet> = Vec::new();
                let mut z = s.clone();
                for &v in &r_list {
                    let mut cnt = 0;
                    let mut last = 0;
                    for (idx, it) in items.iter().enumerate() {
                        if mult[idx] > 0 && it.shadow.contains(v) {
                            cnt += mult[idx];
                            last = idx;
                        }
                    }
                    match cnt {
                        0 => fixed.push(VertexSet::singleton(v)),
                        1 => match items[last].target {
                            Target::Atom(c) => {
                                units[c].insert(v);
                            }
                            Target::Free => {
                                let u = *free_unit[last].get_or_insert_with(|| {
                                    units.push(VertexSet::new());
                                    units.len() - 1
                                });
                                units[u].insert(v);
                            }
                            Target::Outside => fixed.push(VertexSet::singleton(v)),
                        },
                        _ => continue,
                    }
                    z.insert(v);
                }
                if !g.induces_forest(&z) {
                    return Ok(());
                }
                if fixed.iter().any(|b| g.nbr_set(b.first().unwrap()).intersects(&z)) {
                    return Ok(());
                }
                // a limb vertex adjacent to S must share a block with that S-component
                let mut parent: Vec<usize> = (0..units.len()).collect();
                fn find(p: &mut [usize], mut x: usize) -> usize {
                    while p[x] != x {
                        x = p[x];
                    }
                    x
                }
                for ui in 0..units.len() {
                    for v in units[ui].difference(&s) {
                        for u in g.nbr_set(v).intersection(&s) {
                            let (a, b) = (find(&mut parent, ui), find(&mut parent, comp_of(u)));
                            if a != b {
                                parent[a] = b;
                            }
                        }
                    }
                }
                let mut merged: DetMap<usize, VertexSet> = DetMap::default();
                for ui in 0..units.len() {
                    let root = find(&mut parent, ui);
                    merged.entry(root).or_default().union_with(&units[ui]);
                }
                let mut supers: Vec<VertexSet> = merged.into_values().filter(|u| !u.is_empty()).collect();
                supers.sort();
                fixed.sort();
                if !seen_configs.insert((z, fixed.clone(), supers.clone())) {
                    return Ok(());
                }
                sink.emit(&fixed, &supers)
            })?;
        }
    }
    let bound = bounded_family_bound(k, g.n());
    if sink.members.len() as f64 > bound {
        return Err(Error::Invariant(format!("signature family at node {node} exceeds its size bound")));
    }
    Ok(SignatureFamily { node, members: sink.members, provenance: Provenance::Bounded, emitted: sink.emitted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::mis_traces::bag_trace_family;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn exhaustive_small() {
        let g = complete(2);
        let f = signature_family_exhaustive(&g, &vs(&[0, 1]), 0, 16).unwrap();
        assert_eq!(
            f.sorted(),
            vec![
                ForestSignature::empty(),
                ForestSignature::from_blocks(vec![vs(&[0])]),
                ForestSignature::from_blocks(vec![vs(&[0, 1])]),
                ForestSignature::from_blocks(vec![vs(&[1])]),
            ]
        );
        let e = signature_family_exhaustive(&g, &VertexSet::new(), 0, 16).unwrap();
        assert_eq!(e.sorted(), vec![ForestSignature::empty()]);
        assert!(signature_family_exhaustive(&Graph::edgeless(20), &VertexSet::full(20), 0, 16).is_err());
    }

    #[test]
    fn bounded_on_edgeless() {
        let g = Graph::edgeless(3);
        let bag = g.vertices();
        let tr = bag_trace_family(&g, &bag, 0, 0).unwrap();
        let f = signature_family_bounded(&g, &bag, &bag, 0, &tr, BoundedOptions::new(0)).unwrap();
        assert_eq!(f.sorted(), vec![ForestSignature::from_blocks(vec![vs(&[0]), vs(&[1]), vs(&[2])])]);
    }
}
