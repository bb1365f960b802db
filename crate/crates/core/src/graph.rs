//! Simple undirected graphs with labeled vertices.
//!
//! Vertices are addressed by dense ids `0..n`; every vertex also carries a
//! unique external label (the name used in files and reports). Graphs are
//! immutable once built.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A set of vertex ids of one graph, iterated in increasing order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(BTreeSet::from([v]))
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub(crate) fn from_mask(mask: u64) -> VertexSet {
        let mut set = VertexSet::new();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            set.insert(v);
            rest &= rest - 1;
        }
        set
    }

    pub(crate) fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for v in self.iter() {
            bits.insert(v);
        }
        bits
    }

    pub(crate) fn from_bitset(bits: &FixedBitSet) -> VertexSet {
        bits.ones().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

/// A labeled simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and 0-based edges. Repeated edges collapse.
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (v, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), v).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let neighbors: Vec<Vec<usize>> = rows.iter().map(|r| r.ones().collect()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { labels, index, neighbors, rows, edge_count })
    }

    /// Graph on vertices labeled `1..=n` with edges given by those labels.
    pub fn from_one_based_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::UnknownLabel("0".into()));
            }
            zero_based.push((u - 1, v - 1));
        }
        Graph::new(labels, zero_based)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges).expect("valid complete graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges).expect("valid cycle")
    }

    /// Star with one center (label `1`) and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges = (1..=leaves).map(|v| (0, v));
        Graph::new((1..=leaves + 1).map(|i| i.to_string()).collect(), edges).expect("valid star")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Resolves labels to a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.vertex(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string())))
            .collect()
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).collect()
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) if v >= self.vertex_count() => Err(Error::VertexOutOfRange { vertex: v, n: self.vertex_count() }),
            _ => Ok(()),
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.neighbors.iter().all(|ns| ns.len() + 1 == n)
    }

    /// True iff every two members of `set` are adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members: Vec<usize> = set.to_vec();
        members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Connected components of the subgraph induced by `set`, each listed
    /// once, ordered by smallest member.
    pub fn components_of(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut components = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut component = VertexSet::singleton(start);
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if set.contains(w) && seen.insert(w) {
                        component.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// Components of the subgraph induced by `set`, as bitsets.
    pub(crate) fn component_bits(&self, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut rest = set.clone();
        let mut components = Vec::new();
        while let Some(start) = rest.ones().next() {
            rest.set(start, false);
            let mut component = FixedBitSet::with_capacity(self.vertex_count());
            component.insert(start);
            let mut frontier = vec![start];
            while !frontier.is_empty() {
                let mut reached = FixedBitSet::with_capacity(self.vertex_count());
                for u in frontier {
                    reached.union_with(&self.rows[u]);
                }
                reached.intersect_with(&rest);
                rest.difference_with(&reached);
                component.union_with(&reached);
                frontier = reached.ones().collect();
            }
            components.push(component);
        }
        components
    }

    /// True iff every two members of `set` are adjacent.
    pub(crate) fn is_clique_bits(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|v| {
            let mut others = set.clone();
            others.set(v, false);
            others.is_subset(&self.rows[v])
        })
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(&self.all_vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `set`. Vertex `i` of the result is the `i`-th
    /// smallest member of `set`; the returned vector maps back.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = map
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| {
                self.neighbors[u]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX && local[w] > i)
                    .map(|&w| (i, local[w]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let labels = map.iter().map(|&v| self.labels[v].clone()).collect();
        let g = Graph::new(labels, edges).expect("induced subgraph of a valid graph");
        (g, map)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v])).collect();
        f.debug_struct("Graph").field("n", &self.vertex_count()).field("edges", &edges).finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_loop_free() {
        let g = Graph::from_one_based_edges(4, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 3)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
            assert_ne!(u, v);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_one_based_edges(2, &[(1, 1)]), Err(Error::SelfLoop("1".into())));
        assert_eq!(
            Graph::new(vec!["a".into(), "b".into()], [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(vec!["a".into(), "a".into()], []), Err(Error::DuplicateLabel("a".into())));
    }

    #[test]
    fn components_and_induced_subgraphs() {
        let g = Graph::path(5);
        let set: VertexSet = [0, 1, 3, 4].into();
        let comps = g.components_of(&set);
        assert_eq!(comps, vec![VertexSet::from([0, 1]), VertexSet::from([3, 4])]);
        let (h, map) = g.induced_subgraph(&set);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.labels(), &["1", "2", "4", "5"]);
        assert!(!h.is_connected());
    }

    #[test]
    fn cliques() {
        assert!(Graph::complete(5).is_complete());
        assert!(Graph::complete(1).is_complete());
        assert!(!Graph::path(3).is_complete());
        assert!(Graph::path(3).is_clique(&[0, 1].into()));
        assert!(!Graph::path(3).is_clique(&[0, 2].into()));
    }
}
