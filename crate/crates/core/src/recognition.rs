//! Interval-graph recognition.
//!
//! Lexicographic breadth-first search gives a perfect elimination ordering
//! when the graph is chordal; the maximal cliques are read off that
//! ordering, and a consecutive order of them is searched for by
//! backtracking with forward checks on vertex spans.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::arrangement::CliqueArrangement;
use crate::error::NotIntervalReason;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Interval(CliqueArrangement),
    NotInterval(NotIntervalReason),
}

impl Recognition {
    pub fn arrangement(self) -> Option<CliqueArrangement> {
        match self {
            Recognition::Interval(arr) => Some(arr),
            Recognition::NotInterval(_) => None,
        }
    }

    pub fn is_interval(&self) -> bool {
        matches!(self, Recognition::Interval(_))
    }
}

/// Visit order of a lexicographic breadth-first search; ties go to the
/// smallest vertex id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// A perfect elimination ordering of `g`, or `None` if `g` is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    is_perfect_elimination_ordering(g, &peo).then_some(peo)
}

/// Each vertex's neighbors that come later in `order` must form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| position[w] > position[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Maximal cliques of a chordal graph from a perfect elimination ordering:
/// the sets `{v} ∪ later(v)` that are not contained in another such set.
pub fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    let candidates: Vec<FixedBitSet> = peo
        .iter()
        .map(|&v| {
            let mut bits = FixedBitSet::with_capacity(n);
            bits.insert(v);
            for &w in g.neighbors(v) {
                if position[w] > position[v] {
                    bits.insert(w);
                }
            }
            bits
        })
        .collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c.count_ones(..) < d.count_ones(..) || j < i));
        if !dominated {
            cliques.push(VertexSet::from_bitset(c));
        }
    }
    cliques.sort();
    cliques
}

/// Recognizes interval graphs and returns a consecutive clique arrangement.
pub fn recognize_interval(g: &Graph) -> Recognition {
    let Some(peo) = perfect_elimination_ordering(g) else {
        return Recognition::NotInterval(NotIntervalReason::NotChordal);
    };
    let cliques = maximal_cliques_from_peo(g, &peo);
    match consecutive_order(g.vertex_count(), &cliques) {
        Some(order) => {
            let ordered = order.into_iter().map(|i| cliques[i].clone()).collect();
            let arr =
                CliqueArrangement::new(g.vertex_count(), ordered).expect("search only returns consecutive orders");
            Recognition::Interval(arr)
        }
        None => Recognition::NotInterval(NotIntervalReason::NoConsecutiveOrdering),
    }
}

/// Depth-first search for an order of `cliques` in which every vertex
/// occupies a contiguous run. Failed states, keyed by the remaining cliques
/// and the last placed one, are remembered.
pub fn consecutive_order(n: usize, cliques: &[VertexSet]) -> Option<Vec<usize>> {
    let t = cliques.len();
    if t == 0 {
        return Some(Vec::new());
    }
    let bits: Vec<FixedBitSet> = cliques.iter().map(|c| c.to_bitset(n)).collect();
    let mut search = OrderSearch {
        bits: &bits,
        order: Vec::with_capacity(t),
        placed: FixedBitSet::with_capacity(t),
        closed: FixedBitSet::with_capacity(n),
        failed: HashSet::new(),
    };
    for first in 0..t {
        if search.place(first) {
            return Some(search.order);
        }
    }
    None
}

struct OrderSearch<'a> {
    bits: &'a [FixedBitSet],
    order: Vec<usize>,
    placed: FixedBitSet,
    closed: FixedBitSet,
    failed: HashSet<(FixedBitSet, usize)>,
}

impl OrderSearch<'_> {
    /// Appends clique `c`; on failure restores the state and returns false.
    fn place(&mut self, c: usize) -> bool {
        if !self.bits[c].is_disjoint(&self.closed) {
            return false;
        }
        let key = (self.placed.clone(), c);
        if self.failed.contains(&key) {
            return false;
        }
        let saved_closed = self.closed.clone();
        if let Some(&last) = self.order.last() {
            // Vertices leaving the run are closed for good.
            let mut leaving = self.bits[last].clone();
            leaving.difference_with(&self.bits[c]);
            self.closed.union_with(&leaving);
        }
        self.order.push(c);
        self.placed.insert(c);

        let t = self.bits.len();
        let mut remaining_union = FixedBitSet::with_capacity(self.closed.len());
        for d in (0..t).filter(|&d| !self.placed.contains(d)) {
            remaining_union.union_with(&self.bits[d]);
        }
        let ok = if self.order.len() == t {
            true
        } else if !remaining_union.is_disjoint(&self.closed) {
            false
        } else {
            // Vertices of `c` that still appear later must all be in the next clique.
            let mut must = self.bits[c].clone();
            must.intersect_with(&remaining_union);
            let next: Vec<usize> =
                (0..t).filter(|&d| !self.placed.contains(d) && must.is_subset(&self.bits[d])).collect();
            next.into_iter().any(|d| self.place(d))
        };
        if !ok {
            self.order.pop();
            self.placed.set(c, false);
            self.closed = saved_closed;
            self.failed.insert(key);
        }
        ok
    }
}
