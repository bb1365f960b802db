mod common;

use common::{any_representation, maximal_cliques_by_subsets, set_of_mask};
use nsn_core::{
    arrangement_from_intervals, graph_from_intervals, piece_vertices, recognize_interval, CliqueArrangement, Graph,
    VertexSet,
};
use proptest::prelude::*;

fn assert_consecutive(arr: &CliqueArrangement) -> Result<(), TestCaseError> {
    for v in 0..arr.vertex_count() {
        let hits: Vec<usize> = (1..=arr.len()).filter(|&k| arr.clique(k).contains(v)).collect();
        prop_assert!(!hits.is_empty());
        prop_assert_eq!(hits.len(), hits[hits.len() - 1] - hits[0] + 1);
        prop_assert_eq!(arr.span(v), (hits[0], hits[hits.len() - 1]));
    }
    Ok(())
}

fn sorted_cliques(arr: &CliqueArrangement) -> Vec<VertexSet> {
    let mut cs = arr.cliques().to_vec();
    cs.sort();
    cs
}

proptest! {
    #[test]
    fn sweep_yields_exactly_the_maximal_cliques(rep in any_representation(9, 20)) {
        let g = graph_from_intervals(&rep);
        let arr = arrangement_from_intervals(&rep);
        prop_assert!(arr.len() <= g.vertex_count());
        prop_assert_eq!(sorted_cliques(&arr), maximal_cliques_by_subsets(&g));
        assert_consecutive(&arr)?;
    }

    #[test]
    fn recognition_accepts_interval_graphs(rep in any_representation(10, 25)) {
        let g = graph_from_intervals(&rep);
        let arr = recognize_interval(&g).arrangement();
        prop_assert!(arr.is_some());
        let arr = arr.unwrap();
        prop_assert!(arr.check_maximal(&g).is_ok());
        prop_assert_eq!(sorted_cliques(&arr), sorted_cliques(&arrangement_from_intervals(&rep)));
        assert_consecutive(&arr)?;
    }

    #[test]
    fn induced_subgraphs_stay_interval(rep in any_representation(10, 25), mask in any::<u64>()) {
        let g = graph_from_intervals(&rep);
        let keep = set_of_mask(g.vertex_count(), mask);
        prop_assume!(!keep.is_empty());
        let (h, _) = g.induced_subgraph(&keep);
        prop_assert!(recognize_interval(&h).is_interval());
    }

    #[test]
    fn pieces_are_the_vertices_spanning_inside(rep in any_representation(9, 20)) {
        let arr = arrangement_from_intervals(&rep);
        let t = arr.len();
        for l in 1..=t {
            for r in l..=t {
                let piece = piece_vertices(&arr, l, r).unwrap();
                let inside: VertexSet = (0..arr.vertex_count())
                    .filter(|&v| { let (a, b) = arr.span(v); l <= a && b <= r })
                    .collect();
                prop_assert_eq!(&piece.vertices, &inside);
                prop_assert_eq!(piece_vertices(&arr, l, r).unwrap(), piece);
            }
        }
        prop_assert_eq!(piece_vertices(&arr, 1, t).unwrap().vertices, (0..arr.vertex_count()).collect());
    }

    #[test]
    fn reversed_arrangement_is_consecutive(rep in any_representation(9, 20)) {
        let arr = arrangement_from_intervals(&rep).reversed();
        assert_consecutive(&arr)?;
    }
}

#[test]
fn non_interval_graphs_are_rejected() {
    assert!(!recognize_interval(&Graph::cycle(4)).is_interval());
    assert!(!recognize_interval(&Graph::cycle(6)).is_interval());
    assert!(recognize_interval(&Graph::cycle(3)).is_interval());
}
