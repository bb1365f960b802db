//! Closed-form descriptions of `S(G)` and its cut vertices for arrangements
//! with few cliques. These evaluate the set-builder expressions as written
//! and serve as independent checks on the dynamic program.

use crate::arrangement::CliqueArrangement;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn require_len(arr: &CliqueArrangement, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what}, got {} cliques", arr.len())))
    }
}

fn adjacent_to_all(g: &Graph, v: usize, set: &VertexSet) -> bool {
    set.iter().all(|u| u != v && g.has_edge(u, v))
}

/// For `t = 2`: the value 0 together with
/// `{v ∈ A_1 − S_1 : N(v) ∩ (A_2 − S_1) = ∅} ∪ {v ∈ A_2 − S_1 : N(v) ∩ (A_1 − S_1) = ∅}`.
pub fn two_clique_value(g: &Graph, arr: &CliqueArrangement) -> Result<(i64, VertexSet)> {
    require_len(arr, arr.len() == 2, "expected exactly 2 cliques")?;
    let s1 = arr.separator(1);
    let a1 = arr.clique(1).difference(s1);
    let a2 = arr.clique(2).difference(s1);
    let misses = |v: usize, other: &VertexSet| g.neighbors(v).iter().all(|&w| !other.contains(w));
    let xs = a1.iter().filter(|&v| misses(v, &a2)).chain(a2.iter().filter(|&v| misses(v, &a1))).collect();
    Ok((0, xs))
}

/// For `t = 3`: 1 if some `v ∈ A_i − (S_1 ∪ S_2) − (A_j ∪ A_k)`, with
/// `{i, j, k} = {1, 2, 3}`, is adjacent to every vertex of `S_1 ∪ S_2`;
/// otherwise 0.
pub fn three_clique_value(g: &Graph, arr: &CliqueArrangement) -> Result<i64> {
    require_len(arr, arr.len() == 3, "expected exactly 3 cliques")?;
    let seps = arr.separator(1).union(arr.separator(2));
    for i in 1..=3 {
        let others: Vec<usize> = (1..=3).filter(|&k| k != i).collect();
        let private =
            arr.clique(i).difference(&seps).difference(arr.clique(others[0])).difference(arr.clique(others[1]));
        if private.iter().any(|v| adjacent_to_all(g, v, &seps)) {
            return Ok(1);
        }
    }
    Ok(0)
}

/// For `t ≥ 4`: the candidate single-vertex cut-strategies that leave at
/// least two components, evaluated literally.
///
/// Without nested separators the set is the union of
/// * `A_p − (S_{p−1} ∪ S_p ∪ ⋃_{i≠p} A_i)` for `2 ≤ p ≤ t−1`,
/// * `S_p − S` for `2 ≤ p ≤ t−2`, with
///   `S = S_1 ∪ S_{t−1} ∪ (A_1 ∩ A_2 ∩ A_3) ∪ (A_{t−2} ∩ A_{t−1} ∩ A_t)`,
/// * vertices of `A_1 − (S_1 ∪ S_2 ∪ ⋃_{i≥2} A_i)` adjacent to all of `S_1 ∪ S_2`,
/// * vertices of `A_t − (S_{t−2} ∪ S_{t−1} ∪ ⋃_{i≤t−1} A_i)` adjacent to all
///   of `S_{t−2} ∪ S_{t−1}`.
///
/// When some `S_i ⊆ S_j` (`i ≠ j`), the set is instead the vertices of
/// `A_p − S_j` adjacent to every vertex of `S_j`, over all `p` and every
/// such containing separator `S_j`.
pub fn four_plus_cut_candidates(g: &Graph, arr: &CliqueArrangement) -> Result<VertexSet> {
    require_len(arr, arr.len() >= 4, "expected at least 4 cliques")?;
    let t = arr.len();
    let a = |k: usize| arr.clique(k);
    let s = |p: usize| arr.separator(p);

    let containing: Vec<usize> = (1..t).filter(|&j| (1..t).any(|i| i != j && s(i).is_subset(s(j)))).collect();
    let mut out = VertexSet::new();
    if !containing.is_empty() {
        for j in containing {
            for p in 1..=t {
                for v in a(p).difference(s(j)).iter() {
                    if adjacent_to_all(g, v, s(j)) {
                        out.insert(v);
                    }
                }
            }
        }
        return Ok(out);
    }

    for p in 2..t {
        let mut excluded = s(p - 1).union(s(p));
        for i in (1..=t).filter(|&i| i != p) {
            excluded.extend_from(a(i));
        }
        out.extend_from(&a(p).difference(&excluded));
    }
    let mut big_s = s(1).union(s(t - 1));
    big_s.extend_from(&a(1).intersection(a(2)).intersection(a(3)));
    big_s.extend_from(&a(t - 2).intersection(a(t - 1)).intersection(a(t)));
    for p in 2..=t - 2 {
        out.extend_from(&s(p).difference(&big_s));
    }
    let front = s(1).union(s(2));
    let mut excluded = front.clone();
    for i in 2..=t {
        excluded.extend_from(a(i));
    }
    for v in a(1).difference(&excluded).iter() {
        if adjacent_to_all(g, v, &front) {
            out.insert(v);
        }
    }
    let back = s(t - 2).union(s(t - 1));
    let mut excluded = back.clone();
    for i in 1..t {
        excluded.extend_from(a(i));
    }
    for v in a(t).difference(&excluded).iter() {
        if adjacent_to_all(g, v, &back) {
            out.insert(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{arrangement_from_intervals, graph_from_intervals, IntervalRepresentation};
    use crate::recognition::recognize_interval;

    fn setup(g: Graph) -> (Graph, CliqueArrangement) {
        let arr = recognize_interval(&g).arrangement().expect("interval graph");
        (g, arr)
    }

    #[test]
    fn two_cliques() {
        let (g, arr) = setup(Graph::path(3));
        assert_eq!(two_clique_value(&g, &arr).unwrap(), (0, VertexSet::from([0, 2])));
        // K4 minus the edge 1-4, which is also two triangles sharing edge 2-3.
        let (g, arr) = setup(Graph::from_one_based_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap());
        assert_eq!(two_clique_value(&g, &arr).unwrap(), (0, VertexSet::from([0, 3])));
        let (g, arr) = setup(Graph::path(4));
        assert!(matches!(two_clique_value(&g, &arr), Err(Error::Precondition(_))));
    }

    #[test]
    fn three_cliques() {
        let (g, arr) = setup(Graph::star(3));
        assert_eq!(three_clique_value(&g, &arr).unwrap(), 1);
        let (g, arr) = setup(Graph::path(4));
        assert_eq!(three_clique_value(&g, &arr).unwrap(), 0);
        let (g, arr) = setup(Graph::path(5));
        assert!(matches!(three_clique_value(&g, &arr), Err(Error::Precondition(_))));
    }

    #[test]
    fn four_or_more_cliques() {
        let (g, arr) = setup(Graph::path(5));
        assert!(four_plus_cut_candidates(&g, &arr).unwrap().contains(2));
        let (g, arr) = setup(Graph::path(4));
        assert!(matches!(four_plus_cut_candidates(&g, &arr), Err(Error::Precondition(_))));
    }

    #[test]
    fn figure1_candidates_follow_the_nested_branch() {
        let rep = IntervalRepresentation::numbered(&[
            (31, 35),
            (31, 45),
            (36, 40),
            (36, 45),
            (42, 49),
            (41, 45),
            (47, 55),
            (51, 55),
        ])
        .unwrap();
        let g = graph_from_intervals(&rep);
        let arr = arrangement_from_intervals(&rep);
        // S_1 = {2} ⊆ S_2 = {2,4}: vertices outside S_2 adjacent to 2 and 4.
        let got = four_plus_cut_candidates(&g, &arr).unwrap();
        assert_eq!(g.labels_of(&got), vec!["3", "5", "6"]);
    }
}
