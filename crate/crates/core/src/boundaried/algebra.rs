use super::{BoundariedGraph, Label};
use crate::graph::Graph;
use crate::oracles::is_bipartite_set;
use crate::vertex_set::VertexSet;
use serde::Serialize;
use std::fmt::Debug;
use std::hash::Hash;

/// Finite summary of a boundaried graph that is determined by the summaries of its parts.
pub trait TypeAlgebra: Sync {
    type Type: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn name(&self) -> String;
    fn type_of(&self, b: &BoundariedGraph) -> Self::Type;
    fn glue(&self, a: &Self::Type, b: &Self::Type) -> Self::Type;
    fn forget(&self, t: &Self::Type, l: Label) -> Self::Type;
    /// Renames labels through an injective map.
    fn relabel(&self, t: &Self::Type, f: &dyn Fn(Label) -> Label) -> Self::Type;
    fn accepting(&self, t: &Self::Type) -> bool;
    /// No extension of a graph of this type can be accepted.
    fn is_dead(&self, _t: &Self::Type) -> bool {
        false
    }
    /// Direct check of the property on `G[s]`.
    fn holds(&self, g: &Graph, s: &VertexSet) -> bool;
    fn encode(&self, t: &Self::Type) -> String {
        format!("{t:?}")
    }
}

/// Used labels and the edges among labelled vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Boundary {
    pub labels: Vec<Label>,
    pub edges: Vec<(Label, Label)>,
}

impl Boundary {
    pub fn of(b: &BoundariedGraph) -> Boundary {
        let mut labels = b.boundary();
        labels.sort_unstable();
        let mut edges: Vec<(Label, Label)> = b
            .graph()
            .edges()
            .iter()
            .filter_map(|&(u, v)| Some(ordered(b.labels()[u]?, b.labels()[v]?)))
            .collect();
        edges.sort_unstable();
        Boundary { labels, edges }
    }

    pub fn glue(&self, o: &Boundary) -> Boundary {
        let mut labels: Vec<Label> = self.labels.iter().chain(&o.labels).copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut edges: Vec<(Label, Label)> = self.edges.iter().chain(&o.edges).copied().collect();
        edges.sort_unstable();
        edges.dedup();
        Boundary { labels, edges }
    }

    /// Removes `l`; returns the labels that were adjacent to it.
    pub fn forget(&self, l: Label) -> (Boundary, Vec<Label>) {
        let nbrs = self.neighbours(l);
        let labels = self.labels.iter().copied().filter(|&x| x != l).collect();
        let edges = self.edges.iter().copied().filter(|&(a, b)| a != l && b != l).collect();
        (Boundary { labels, edges }, nbrs)
    }

    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Boundary {
        let mut labels: Vec<Label> = self.labels.iter().map(|&l| f(l)).collect();
        labels.sort_unstable();
        let mut edges: Vec<(Label, Label)> = self.edges.iter().map(|&(a, b)| ordered(f(a), f(b))).collect();
        edges.sort_unstable();
        Boundary { labels, edges }
    }

    pub fn contains(&self, l: Label) -> bool {
        self.labels.binary_search(&l).is_ok()
    }

    pub fn neighbours(&self, l: Label) -> Vec<Label> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == l { Some(b) } else if b == l { Some(a) } else { None })
            .collect()
    }
}

fn ordered(a: Label, b: Label) -> (Label, Label) {
    (a.min(b), a.max(b))
}

/// Union-find with parity, over labels plus scratch nodes.
struct Dsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

enum Union {
    Merged,
    Cycle { odd: bool },
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), parity: vec![false; n] }
    }

    fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parity.push(false);
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (r, q) = self.find(p);
        self.parent[x] = r;
        self.parity[x] ^= q;
        (r, self.parity[x])
    }

    fn union(&mut self, a: usize, b: usize, odd: bool) -> Union {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return Union::Cycle { odd: pa ^ pb != odd };
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ odd;
        Union::Merged
    }
}

/// Outcome of overlaying label blocks (each a connected piece with label parities) and extra edges.
struct Overlay {
    blocks: Vec<Vec<(Label, bool)>>,
    cycle: bool,
    odd_cycle: bool,
}

/// Blocks are joined through star nodes; `links` are odd edges that also merge blocks;
/// `checks` are odd edges that only count toward cycle detection. Labels in `drop` are left out.
fn overlay(labels: &[Label], sides: &[&[Vec<(Label, bool)>]], links: &[(Label, Label)], checks: &[(Label, Label)], drop: Option<Label>) -> Overlay {
    let idx = |l: Label| labels.binary_search(&l).expect("label present");
    let mut dsu = Dsu::new(labels.len());
    let (mut cycle, mut odd_cycle) = (false, false);
    let mut note = |u: Union| {
        if let Union::Cycle { odd } = u {
            cycle = true;
            odd_cycle |= odd;
        }
    };
    for side in sides {
        for block in side.iter() {
            let star = dsu.push();
            for &(l, p) in block {
                note(dsu.union(star, idx(l), p));
            }
        }
    }
    for &(a, b) in links {
        note(dsu.union(idx(a), idx(b), true));
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<(Label, bool)>> = Default::default();
    for &l in labels {
        if Some(l) != drop {
            let (r, p) = dsu.find(idx(l));
            groups.entry(r).or_default().push((l, p));
        }
    }
    for &(a, b) in checks {
        note(dsu.union(idx(a), idx(b), true));
    }
    let mut blocks: Vec<Vec<(Label, bool)>> = groups.into_values().map(normalize).collect();
    blocks.sort();
    Overlay { blocks, cycle, odd_cycle }
}

fn normalize(mut b: Vec<(Label, bool)>) -> Vec<(Label, bool)> {
    b.sort_unstable();
    let flip = b.first().is_some_and(|x| x.1);
    for x in &mut b {
        x.1 ^= flip;
    }
    b
}

/// Blocks of labels by components of the graph without its labelled-labelled edges, with
/// two-colouring parities when that graph is bipartite (all false otherwise).
fn blocks_of(b: &BoundariedGraph) -> Vec<Vec<(Label, bool)>> {
    let g = b.graph();
    let lab = b.labels();
    let mut dsu = Dsu::new(g.n());
    for &(u, v) in g.edges() {
        if lab[u].is_none() || lab[v].is_none() {
            dsu.union(u, v, true);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<(Label, bool)>> = Default::default();
    for v in 0..g.n() {
        if let Some(l) = lab[v] {
            let (r, p) = dsu.find(v);
            groups.entry(r).or_default().push((l, p));
        }
    }
    let mut blocks: Vec<_> = groups.into_values().map(normalize).collect();
    blocks.sort();
    blocks
}

fn strip(blocks: Vec<Vec<(Label, bool)>>) -> Vec<Vec<Label>> {
    blocks.into_iter().map(|b| b.into_iter().map(|x| x.0).collect()).collect()
}

fn dress(blocks: &[Vec<Label>]) -> Vec<Vec<(Label, bool)>> {
    blocks.iter().map(|b| b.iter().map(|&l| (l, false)).collect()).collect()
}

/// A boundary plus property state; `None` marks a graph that already violates the property.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Typed<S> {
    pub boundary: Boundary,
    pub state: Option<S>,
}

/// Acyclicity. State: labels grouped by connectivity avoiding labelled-labelled edges.
#[derive(Clone, Copy, Debug, Default)]
pub struct ForestAlgebra;

impl TypeAlgebra for ForestAlgebra {
    type Type = Typed<Vec<Vec<Label>>>;

    fn name(&self) -> String {
        "forest".into()
    }

    fn type_of(&self, b: &BoundariedGraph) -> Self::Type {
        let boundary = Boundary::of(b);
        let ok = b.graph().induces_forest(&b.graph().vertices());
        Typed { boundary, state: ok.then(|| strip(blocks_of(b))) }
    }

    fn glue(&self, a: &Self::Type, b: &Self::Type) -> Self::Type {
        let boundary = a.boundary.glue(&b.boundary);
        let state = match (&a.state, &b.state) {
            (Some(x), Some(y)) => {
                let (x, y) = (dress(x), dress(y));
                let o = overlay(&boundary.labels, &[&x, &y], &[], &boundary.edges, None);
                (!o.cycle).then(|| strip(o.blocks))
            }
            _ => None,
        };
        Typed { boundary, state }
    }

    fn forget(&self, t: &Self::Type, l: Label) -> Self::Type {
        if !t.boundary.contains(l) {
            return t.clone();
        }
        let (boundary, nbrs) = t.boundary.forget(l);
        let state = t.state.as_ref().map(|s| {
            let links: Vec<(Label, Label)> = nbrs.iter().map(|&y| (l, y)).collect();
            strip(overlay(&t.boundary.labels, &[&dress(s)], &links, &[], Some(l)).blocks)
        });
        Typed { boundary, state }
    }

    fn relabel(&self, t: &Self::Type, f: &dyn Fn(Label) -> Label) -> Self::Type {
        let state = t.state.as_ref().map(|s| {
            let mut blocks: Vec<Vec<Label>> = s
                .iter()
                .map(|b| {
                    let mut b: Vec<Label> = b.iter().map(|&l| f(l)).collect();
                    b.sort_unstable();
                    b
                })
                .collect();
            blocks.sort();
            blocks
        });
        Typed { boundary: t.boundary.relabel(f), state }
    }

    fn accepting(&self, t: &Self::Type) -> bool {
        t.state.is_some()
    }

    fn is_dead(&self, t: &Self::Type) -> bool {
        t.state.is_none()
    }

    fn holds(&self, g: &Graph, s: &VertexSet) -> bool {
        g.induces_forest(s)
    }
}

/// Two-colourability. State: label blocks with parities relative to the block's least label.
#[derive(Clone, Copy, Debug, Default)]
pub struct BipartiteAlgebra;

impl TypeAlgebra for BipartiteAlgebra {
    type Type = Typed<Vec<Vec<(Label, bool)>>>;

    fn name(&self) -> String {
        "bipartite".into()
    }

    fn type_of(&self, b: &BoundariedGraph) -> Self::Type {
        let boundary = Boundary::of(b);
        let ok = is_bipartite_set(b.graph(), &b.graph().vertices());
        Typed { boundary, state: ok.then(|| blocks_of(b)) }
    }

    fn glue(&self, a: &Self::Type, b: &Self::Type) -> Self::Type {
        let boundary = a.boundary.glue(&b.boundary);
        let state = match (&a.state, &b.state) {
            (Some(x), Some(y)) => {
                let o = overlay(&boundary.labels, &[x, y], &[], &boundary.edges, None);
                (!o.odd_cycle).then_some(o.blocks)
            }
            _ => None,
        };
        Typed { boundary, state }
    }

    fn forget(&self, t: &Self::Type, l: Label) -> Self::Type {
        if !t.boundary.contains(l) {
            return t.clone();
        }
        let (boundary, nbrs) = t.boundary.forget(l);
        let state = t.state.as_ref().map(|s| {
            let links: Vec<(Label, Label)> = nbrs.iter().map(|&y| (l, y)).collect();
            overlay(&t.boundary.labels, &[s], &links, &[], Some(l)).blocks
        });
        Typed { boundary, state }
    }

    fn relabel(&self, t: &Self::Type, f: &dyn Fn(Label) -> Label) -> Self::Type {
        let state = t.state.as_ref().map(|s| {
            let mut blocks: Vec<Vec<(Label, bool)>> = s.iter().map(|b| normalize(b.iter().map(|&(l, p)| (f(l), p)).collect())).collect();
            blocks.sort();
            blocks
        });
        Typed { boundary: t.boundary.relabel(f), state }
    }

    fn accepting(&self, t: &Self::Type) -> bool {
        t.state.is_some()
    }

    fn is_dead(&self, t: &Self::Type) -> bool {
        t.state.is_none()
    }

    fn holds(&self, g: &Graph, s: &VertexSet) -> bool {
        is_bipartite_set(g, s)
    }
}

/// Maximum degree at most `d`. State: per label, neighbours among unlabelled vertices (capped at `d+1`).
#[derive(Clone, Copy, Debug)]
pub struct MaxDegreeAlgebra {
    pub d: usize,
}

impl MaxDegreeAlgebra {
    fn cap(&self, x: usize) -> u8 {
        x.min(self.d + 1).min(u8::MAX as usize) as u8
    }

    fn check(&self, boundary: Boundary, load: Vec<u8>) -> Typed<Vec<u8>> {
        let over = boundary.labels.iter().zip(&load).any(|(&l, &h)| h as usize + boundary.neighbours(l).len() > self.d);
        Typed { state: (!over).then_some(load), boundary }
    }
}

impl TypeAlgebra for MaxDegreeAlgebra {
    type Type = Typed<Vec<u8>>;

    fn name(&self) -> String {
        format!("max-degree:{}", self.d)
    }

    fn type_of(&self, b: &BoundariedGraph) -> Self::Type {
        let g = b.graph();
        let boundary = Boundary::of(b);
        if (0..g.n()).any(|v| g.degree(v) > self.d) {
            return Typed { boundary, state: None };
        }
        let load = boundary
            .labels
            .iter()
            .map(|&l| {
                let v = b.vertex_with(l).expect("label in use");
                self.cap(g.neighbors(v).iter().filter(|&&u| b.labels()[u].is_none()).count())
            })
            .collect();
        self.check(boundary, load)
    }

    fn glue(&self, a: &Self::Type, b: &Self::Type) -> Self::Type {
        let boundary = a.boundary.glue(&b.boundary);
        let (Some(x), Some(y)) = (&a.state, &b.state) else {
            return Typed { boundary, state: None };
        };
        let get = |t: &Self::Type, s: &Vec<u8>, l: Label| t.boundary.labels.binary_search(&l).map_or(0, |i| s[i] as usize);
        let load = boundary.labels.iter().map(|&l| self.cap(get(a, x, l) + get(b, y, l))).collect();
        self.check(boundary, load)
    }

    fn forget(&self, t: &Self::Type, l: Label) -> Self::Type {
        if !t.boundary.contains(l) {
            return t.clone();
        }
        let (boundary, nbrs) = t.boundary.forget(l);
        let Some(s) = &t.state else {
            return Typed { boundary, state: None };
        };
        let load = boundary
            .labels
            .iter()
            .map(|&y| {
                let i = t.boundary.labels.binary_search(&y).expect("label kept");
                self.cap(s[i] as usize + usize::from(nbrs.contains(&y)))
            })
            .collect();
        self.check(boundary, load)
    }

    fn relabel(&self, t: &Self::Type, f: &dyn Fn(Label) -> Label) -> Self::Type {
        let boundary = t.boundary.relabel(f);
        let state = t.state.as_ref().map(|s| {
            let mut pairs: Vec<(Label, u8)> = t.boundary.labels.iter().map(|&l| f(l)).zip(s.iter().copied()).collect();
            pairs.sort_unstable();
            pairs.into_iter().map(|x| x.1).collect()
        });
        Typed { boundary, state }
    }

    fn accepting(&self, t: &Self::Type) -> bool {
        t.state.is_some()
    }

    fn is_dead(&self, t: &Self::Type) -> bool {
        t.state.is_none()
    }

    fn holds(&self, g: &Graph, s: &VertexSet) -> bool {
        s.iter().all(|v| g.nbr_set(v).intersection_len(s) <= self.d)
    }
}
