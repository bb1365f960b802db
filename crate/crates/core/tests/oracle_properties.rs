mod common;

use common::{connected_graph, set_of_mask};
use nsn_core::oracle::recursive_formula_value;
use nsn_core::{brute_force_nsn, enumerate_minimal_cut_strategies, is_minimal_cut_strategy, subvert, Graph};
use proptest::prelude::*;

/// `S(G)` computed by scanning every strategy, kept deliberately naive.
fn scan(g: &Graph) -> i64 {
    if g.is_complete() {
        return 1;
    }
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter_map(|m| {
            let out = subvert(g, &set_of_mask(n, m)).unwrap();
            out.classification.is_admissible().then(|| out.score())
        })
        .max()
        .unwrap()
}

proptest! {
    #[test]
    fn brute_force_agrees_with_a_naive_scan(g in connected_graph(8)) {
        let res = brute_force_nsn(&g).unwrap();
        prop_assert_eq!(res.value, scan(&g));
        if !g.is_complete() {
            let out = subvert(&g, &res.witness).unwrap();
            prop_assert!(out.classification.is_admissible());
            prop_assert_eq!(out.score(), res.value);
        }
    }

    #[test]
    fn minimal_strategies_are_exactly_the_minimal_ones(g in connected_graph(7)) {
        let listed = enumerate_minimal_cut_strategies(&g).unwrap();
        let n = g.vertex_count();
        for m in 0u64..1 << n {
            let xs = set_of_mask(n, m);
            prop_assert_eq!(listed.contains(&xs), is_minimal_cut_strategy(&g, &xs).unwrap());
        }
        for a in &listed {
            for b in &listed {
                prop_assert!(a == b || !a.is_subset(b));
            }
        }
        let sizes: Vec<usize> = listed.iter().map(|s| s.len()).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn recursive_formula_equals_the_definition(g in connected_graph(8)) {
        prop_assume!(!g.is_complete());
        prop_assert_eq!(recursive_formula_value(&g).unwrap(), brute_force_nsn(&g).unwrap().value);
    }
}

#[test]
fn small_named_graphs() {
    assert_eq!(brute_force_nsn(&Graph::cycle(4)).unwrap().value, 0);
    assert_eq!(brute_force_nsn(&Graph::path(2)).unwrap().value, 1);
    assert_eq!(brute_force_nsn(&Graph::star(5)).unwrap().value, 3);
    assert_eq!(recursive_formula_value(&Graph::cycle(6)).unwrap(), brute_force_nsn(&Graph::cycle(6)).unwrap().value);
}
