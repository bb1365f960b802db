//! Interval representations and the endpoint sweep that turns one into a
//! consecutive clique arrangement.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::arrangement::CliqueArrangement;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Closed interval `[left, right]` with integer endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Interval {
        Interval { left, right }
    }

    /// Closed intervals meet when they share at least one point.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    labels: Vec<String>,
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(labels: Vec<String>, intervals: Vec<Interval>) -> Result<IntervalRepresentation> {
        if labels.len() != intervals.len() {
            return Err(Error::Precondition(format!("{} labels for {} intervals", labels.len(), intervals.len())));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for (label, iv) in labels.iter().zip(&intervals) {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            if iv.left > iv.right {
                return Err(Error::InvalidInterval { label: label.clone(), left: iv.left, right: iv.right });
            }
        }
        Ok(IntervalRepresentation { labels, intervals })
    }

    /// Vertices labeled `1..=n` in the order given.
    pub fn numbered(intervals: &[(i64, i64)]) -> Result<IntervalRepresentation> {
        IntervalRepresentation::new(
            (1..=intervals.len()).map(|i| i.to_string()).collect(),
            intervals.iter().map(|&(l, r)| Interval::new(l, r)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Interval)> + '_ {
        self.labels.iter().map(String::as_str).zip(self.intervals.iter().copied())
    }
}

/// Intersection graph of the representation: `u ~ v` iff their closed
/// intervals share a point.
pub fn graph_from_intervals(rep: &IntervalRepresentation) -> Graph {
    let ivs = rep.intervals();
    let mut edges = Vec::new();
    for u in 0..ivs.len() {
        for v in u + 1..ivs.len() {
            if ivs[u].intersects(&ivs[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(rep.labels().to_vec(), edges).expect("labels validated by the representation")
}

/// Sweeps the endpoints from left to right. At every coordinate the
/// intervals starting there join the active set first; if some active
/// interval ends at that coordinate and the set has grown since the last
/// emission, the active set is a maximal clique and is emitted.
pub fn arrangement_from_intervals(rep: &IntervalRepresentation) -> CliqueArrangement {
    let mut starts: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut ends: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (v, iv) in rep.intervals().iter().enumerate() {
        starts.entry(iv.left).or_default().push(v);
        ends.entry(iv.right).or_default().push(v);
    }
    let mut coords: Vec<i64> = starts.keys().chain(ends.keys()).copied().collect();
    coords.sort_unstable();
    coords.dedup();

    let mut active = VertexSet::new();
    let mut grown = false;
    let mut cliques = Vec::new();
    for x in coords {
        if let Some(vs) = starts.get(&x) {
            for &v in vs {
                active.insert(v);
            }
            grown = true;
        }
        if let Some(vs) = ends.get(&x) {
            if grown {
                cliques.push(active.clone());
                grown = false;
            }
            for &v in vs {
                active.remove(v);
            }
        }
    }
    CliqueArrangement::new(rep.len(), cliques).expect("sweep yields a consecutive arrangement")
}
