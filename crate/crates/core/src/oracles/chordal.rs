use crate::graph::{line_graph_square, Graph};
use crate::vertex_set::VertexSet;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal(Vec<usize>),
    /// A chordless cycle of length at least 4.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search order (ties to the lowest id), reversed.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        match later.iter().min_by_key(|&&u| pos[u]) {
            None => true,
            Some(&p) => later.iter().all(|&u| u == p || g.has_edge(u, p)),
        }
    })
}

/// Shortest `u`–`w` path avoiding `blocked`.
fn shortest_path(g: &Graph, u: usize, w: usize, blocked: &VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[u] = u;
    let mut q = VecDeque::from([u]);
    while let Some(x) = q.pop_front() {
        if x == w {
            let mut p = vec![w];
            let mut y = w;
            while y != u {
                y = prev[y];
                p.push(y);
            }
            p.reverse();
            return Some(p);
        }
        for &y in g.neighbors(x) {
            if prev[y] == usize::MAX && !blocked.contains(y) {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    None
}

fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let ns = g.neighbors(v);
        for (i, &u) in ns.iter().enumerate() {
            for &w in &ns[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut blocked = g.nbr_set(v).clone();
                blocked.insert(v);
                blocked.remove(u);
                blocked.remove(w);
                if let Some(p) = shortest_path(g, u, w, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn chordality_test(g: &Graph) -> Chordality {
    let order = mcs_elimination_order(g);
    if is_perfect_elimination(g, &order) {
        Chordality::Chordal(order)
    } else {
        Chordality::Hole(find_hole(g).expect("a graph without a perfect elimination ordering has a hole"))
    }
}

/// Whether some tree decomposition has every touching induced matching of size at most 1,
/// decided by chordality of `L²(G)`.
pub fn recognize_imtw_at_most_1(g: &Graph) -> bool {
    chordality_test(&line_graph_square(g).0).is_chordal()
}
