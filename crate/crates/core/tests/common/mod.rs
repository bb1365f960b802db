#![allow(dead_code)]

use nsn_core::{Graph, IntervalRepresentation, VertexSet};
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices with independent edge bits.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_one_based_edges(n, &edges).unwrap()
        })
    })
}

pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    any_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

/// Representations with `1..=max_n` intervals and endpoints in `0..=max_coord`.
pub fn any_representation(max_n: usize, max_coord: i64) -> impl Strategy<Value = IntervalRepresentation> {
    proptest::collection::vec((0..=max_coord, 0..=max_coord), 1..=max_n).prop_map(|pairs| {
        let ivs: Vec<(i64, i64)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        IntervalRepresentation::numbered(&ivs).unwrap()
    })
}

pub fn connected_representation(max_n: usize, max_coord: i64) -> impl Strategy<Value = IntervalRepresentation> {
    any_representation(max_n, max_coord)
        .prop_filter("connected", |rep| nsn_core::graph_from_intervals(rep).is_connected())
}

pub fn set_of_mask(n: usize, mask: u64) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Maximal cliques by checking every subset.
pub fn maximal_cliques_by_subsets(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let cliques: Vec<VertexSet> = (1u64..1 << n).map(|m| set_of_mask(n, m)).filter(|s| g.is_clique(s)).collect();
    let mut out: Vec<VertexSet> =
        cliques.iter().filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.is_subset(d))).cloned().collect();
    out.sort();
    out
}
