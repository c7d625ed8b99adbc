use super::{validate_decomposition, TreeDecomposition, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "snake_case")]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// Decomposition whose nodes are leaf / introduce / forget / join, with empty leaves and root.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    td: TreeDecomposition,
    kinds: Vec<NodeKind>,
}

impl NiceTreeDecomposition {
    pub fn td(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn kind(&self, t: usize) -> NodeKind {
        self.kinds[t]
    }

    pub fn kinds(&self) -> &[NodeKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        self.td.bag(t)
    }

    pub fn children(&self, t: usize) -> &[usize] {
        self.td.children(t)
    }

    pub fn root(&self) -> usize {
        self.td.root()
    }

    pub fn postorder(&self) -> &[usize] {
        self.td.postorder()
    }

    /// Checks the node-kind rules; tree-decomposition axioms are checked by `validate_decomposition`.
    pub fn nice_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let bad = |t: usize, r: &str| Violation::NotNice { node: t, reason: r.to_string() };
        if !self.bag(self.root()).is_empty() {
            out.push(bad(self.root(), "root bag not empty"));
        }
        for t in 0..self.len() {
            let ch = self.children(t);
            let bag = self.bag(t);
            let ok = match self.kinds[t] {
                NodeKind::Leaf => ch.is_empty() && bag.is_empty(),
                NodeKind::Introduce(v) => {
                    ch.len() == 1 && !self.bag(ch[0]).contains(v) && {
                        let mut b = self.bag(ch[0]).clone();
                        b.insert(v);
                        &b == bag
                    }
                }
                NodeKind::Forget(v) => {
                    ch.len() == 1 && !bag.contains(v) && {
                        let mut b = bag.clone();
                        b.insert(v);
                        &b == self.bag(ch[0])
                    }
                }
                NodeKind::Join => ch.len() == 2 && ch.iter().all(|&c| self.bag(c) == bag),
            };
            if !ok {
                out.push(bad(t, &format!("{:?} does not match its children", self.kinds[t])));
            }
        }
        out
    }
}

struct Builder<'a> {
    td: &'a TreeDecomposition,
    bags: Vec<VertexSet>,
    kinds: Vec<NodeKind>,
    edges: Vec<(usize, usize)>,
}

impl Builder<'_> {
    fn push(&mut self, bag: VertexSet, kind: NodeKind, children: &[usize]) -> usize {
        let id = self.bags.len();
        self.bags.push(bag);
        self.kinds.push(kind);
        self.edges.extend(children.iter().map(|&c| (c, id)));
        id
    }

    /// Walks from `bag` at node `from` to `target` by forgets then introduces.
    fn morph(&mut self, mut from: usize, target: &VertexSet) -> usize {
        let mut bag = self.bags[from].clone();
        for v in bag.difference(target).to_vec() {
            bag.remove(v);
            from = self.push(bag.clone(), NodeKind::Forget(v), &[from]);
        }
        for v in target.difference(&bag).to_vec() {
            bag.insert(v);
            from = self.push(bag.clone(), NodeKind::Introduce(v), &[from]);
        }
        from
    }

    /// Nice subtree for original node `t`, topped by a node whose bag is `X_t`.
    fn build(&mut self, t: usize) -> usize {
        let target = self.td.bag(t).clone();
        let mut tops = Vec::new();
        for &c in self.td.children(t) {
            let below = self.build(c);
            tops.push(self.morph(below, &target));
        }
        if tops.is_empty() {
            let leaf = self.push(VertexSet::new(), NodeKind::Leaf, &[]);
            return self.morph(leaf, &target);
        }
        let mut acc = tops[0];
        for &next in &tops[1..] {
            acc = self.push(target.clone(), NodeKind::Join, &[acc, next]);
        }
        acc
    }
}

/// Converts a valid decomposition to nice form; every new bag is a subset of an original bag.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    if let Some(v) = validate_decomposition(g, td).into_iter().next() {
        return Err(Error::input(format!("invalid tree decomposition: {v}")));
    }
    let mut b = Builder { td, bags: Vec::new(), kinds: Vec::new(), edges: Vec::new() };
    let top = b.build(td.root());
    let root = b.morph(top, &VertexSet::new());
    let nice = NiceTreeDecomposition { td: TreeDecomposition::new(b.bags, b.edges, root), kinds: b.kinds };
    debug_assert!(nice.nice_violations().is_empty());
    Ok(nice)
}
