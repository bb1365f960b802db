//! Neighborhood subversion and cut-strategies.
//!
//! Subverting a set `X` deletes its closed neighborhood `N[X]`; what is left
//! is the survival subgraph `G/X`. `X` is a cut-strategy when `G/X` is
//! disconnected, a clique, or empty.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest strategy for which minimality is decided by subset enumeration.
pub const DEFAULT_SUBSET_BOUND: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Two or more components survive.
    Disconnected,
    /// Exactly one component survives and it is complete (a single vertex counts).
    Clique,
    /// Nothing survives.
    Empty,
    /// The survivors form a connected, non-complete graph.
    NotCutStrategy,
}

impl Classification {
    pub fn is_cut_strategy(self) -> bool {
        self != Classification::NotCutStrategy
    }

    /// Cut-strategy leaving at least one component.
    pub fn is_admissible(self) -> bool {
        matches!(self, Classification::Disconnected | Classification::Clique)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubversionOutcome {
    pub strategy: VertexSet,
    pub removed: VertexSet,
    pub survivors: VertexSet,
    pub components: Vec<VertexSet>,
    pub classification: Classification,
}

impl SubversionOutcome {
    /// Number of components of the survival subgraph.
    pub fn omega(&self) -> usize {
        self.components.len()
    }

    /// `ω(G/X) − |X|`.
    pub fn score(&self) -> i64 {
        self.components.len() as i64 - self.strategy.len() as i64
    }
}

/// `N[X]`: the strategy together with all of its neighbors.
pub fn closed_neighborhood(g: &Graph, xs: &VertexSet) -> Result<VertexSet> {
    g.check_set(xs)?;
    let mut out = xs.clone();
    for x in xs.iter() {
        out.extend(g.neighbors(x).iter().copied());
    }
    Ok(out)
}

/// `N(X)`: vertices adjacent to some member of `X`, minus `X` itself.
pub fn open_neighborhood(g: &Graph, xs: &VertexSet) -> Result<VertexSet> {
    Ok(closed_neighborhood(g, xs)?.difference(xs))
}

pub(crate) fn classify(g: &Graph, components: &[VertexSet]) -> Classification {
    match components {
        [] => Classification::Empty,
        [only] if g.is_clique(only) => Classification::Clique,
        [_] => Classification::NotCutStrategy,
        _ => Classification::Disconnected,
    }
}

/// Applies the strategy `xs` to `g`.
pub fn subvert(g: &Graph, xs: &VertexSet) -> Result<SubversionOutcome> {
    let removed = closed_neighborhood(g, xs)?;
    let survivors = g.all_vertices().difference(&removed);
    let components = g.components_of(&survivors);
    let classification = classify(g, &components);
    Ok(SubversionOutcome { strategy: xs.clone(), removed, survivors, components, classification })
}

/// Cut-strategy with no proper subset that is also a cut-strategy, decided
/// by enumerating every proper subset. Strategies larger than
/// [`DEFAULT_SUBSET_BOUND`] are rejected.
pub fn is_minimal_cut_strategy(g: &Graph, xs: &VertexSet) -> Result<bool> {
    is_minimal_cut_strategy_bounded(g, xs, DEFAULT_SUBSET_BOUND)
}

pub fn is_minimal_cut_strategy_bounded(g: &Graph, xs: &VertexSet, bound: usize) -> Result<bool> {
    g.check_set(xs)?;
    if xs.len() > bound || xs.len() >= 64 {
        return Err(Error::TooLarge { size: xs.len(), bound });
    }
    if !subvert(g, xs)?.classification.is_cut_strategy() {
        return Ok(false);
    }
    let members = xs.to_vec();
    let full: u64 = (1u64 << members.len()) - 1;
    for mask in 0..full {
        let subset: VertexSet =
            members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if subvert(g, &subset)?.classification.is_cut_strategy() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates the structural characterization of minimal cut-strategies in
/// terms of the sets `B_ij = N(v_i) ∩ N(C_j)`.
///
/// For a disconnected survival graph with components `C_1..C_k` it checks
/// that every `B_ij` is nonempty, that for `|X| ≥ 2` no two members have
/// nested `B` sets on a common component, the adjacency clause on members
/// of `X`, and that `X` is independent. For a clique survival graph `C` it
/// checks that `C` is a maximal clique of `g`, that every `B_i` is
/// nonempty, pairwise non-nesting, and the adjacency clause.
///
/// This is a diagnostic; minimality itself is decided by
/// [`is_minimal_cut_strategy`].
pub fn minimality_conditions_hold(g: &Graph, xs: &VertexSet) -> Result<bool> {
    let outcome = subvert(g, xs)?;
    if xs.is_empty() || !outcome.classification.is_admissible() {
        return Err(Error::Precondition(
            "strategy must be nonempty and leave a disconnected or clique survival graph".into(),
        ));
    }
    let members = xs.to_vec();
    let component_neighborhoods: Vec<VertexSet> =
        outcome.components.iter().map(|c| open_neighborhood(g, c)).collect::<Result<_>>()?;
    // b[i][j] = N(v_i) ∩ N(C_j)
    let b: Vec<Vec<VertexSet>> = members
        .iter()
        .map(|&v| {
            let nv: VertexSet = g.neighbors(v).iter().copied().collect();
            component_neighborhoods.iter().map(|nc| nv.intersection(nc)).collect()
        })
        .collect();

    let all_nonempty = b.iter().all(|row| row.iter().all(|s| !s.is_empty()));
    let mut no_nesting = true;
    if members.len() >= 2 {
        for s in 0..members.len() {
            for t in s + 1..members.len() {
                for (bs, bt) in b[s].iter().zip(&b[t]) {
                    if bs.is_subset(bt) || bt.is_subset(bs) {
                        no_nesting = false;
                    }
                }
            }
        }
    }

    // For v in X: if some member v_j of X in N[v] has no edge into any
    // component, then v has no neighbor among the other members of X.
    let survivors = &outcome.survivors;
    let touches_components = |u: usize| g.neighbors(u).iter().any(|&w| survivors.contains(w));
    let mut adjacency_clause = true;
    if members.len() >= 2 {
        for &v in &members {
            let trigger = members.iter().any(|&vj| (vj == v || g.has_edge(v, vj)) && !touches_components(vj));
            let has_member_neighbor = members.iter().any(|&u| u != v && g.has_edge(u, v));
            if trigger && has_member_neighbor {
                adjacency_clause = false;
            }
        }
    }

    let holds = match outcome.classification {
        Classification::Disconnected => {
            let independent =
                members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            all_nonempty && no_nesting && adjacency_clause && independent
        }
        Classification::Clique => {
            let clique = &outcome.components[0];
            let maximal = (0..g.vertex_count())
                .filter(|&u| !clique.contains(u))
                .all(|u| clique.iter().any(|c| !g.has_edge(u, c)));
            maximal && all_nonempty && no_nesting && adjacency_clause
        }
        _ => unreachable!("checked above"),
    };
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure1() -> Graph {
        Graph::from_one_based_edges(
            8,
            &[(1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (4, 5), (4, 6), (5, 6), (5, 7), (7, 8)],
        )
        .unwrap()
    }

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.vertex_set(labels).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let g = figure1();
        assert_eq!(closed_neighborhood(&g, &set(&g, &["5"])).unwrap(), set(&g, &["2", "4", "5", "6", "7"]));
        assert!(closed_neighborhood(&g, &VertexSet::new()).unwrap().is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(closed_neighborhood(&k4, &[0].into()).unwrap(), k4.all_vertices());
        assert_eq!(closed_neighborhood(&k4, &[4].into()), Err(Error::VertexOutOfRange { vertex: 4, n: 4 }));
    }

    #[test]
    fn subvert_examples() {
        let g = figure1();
        let out = subvert(&g, &set(&g, &["5"])).unwrap();
        assert_eq!(out.classification, Classification::Disconnected);
        assert_eq!(out.components, vec![set(&g, &["1"]), set(&g, &["3"]), set(&g, &["8"])]);
        assert_eq!(out.score(), 2);

        let out = subvert(&g, &set(&g, &["2"])).unwrap();
        assert_eq!(out.classification, Classification::Clique);
        assert_eq!(out.components, vec![set(&g, &["7", "8"])]);

        let out = subvert(&g, &set(&g, &["7"])).unwrap();
        assert_eq!(out.removed, set(&g, &["5", "7", "8"]));
        assert_eq!(out.classification, Classification::NotCutStrategy);

        let k3 = Graph::complete(3);
        assert_eq!(subvert(&k3, &[0].into()).unwrap().classification, Classification::Empty);
        assert_eq!(subvert(&k3, &VertexSet::new()).unwrap().classification, Classification::Clique);
    }

    #[test]
    fn single_survivor_is_a_clique() {
        let p3 = Graph::path(3);
        let out = subvert(&p3, &[0].into()).unwrap();
        assert_eq!(out.survivors, VertexSet::from([2]));
        assert_eq!(out.classification, Classification::Clique);
    }

    #[test]
    fn minimality_examples() {
        let g = figure1();
        assert!(is_minimal_cut_strategy(&g, &set(&g, &["5"])).unwrap());
        assert!(!is_minimal_cut_strategy(&g, &set(&g, &["5", "6"])).unwrap());
        assert!(is_minimal_cut_strategy(&Graph::complete(4), &VertexSet::new()).unwrap());
        assert!(!is_minimal_cut_strategy(&g, &set(&g, &["7"])).unwrap());
        let big: VertexSet = (0..21).collect();
        assert_eq!(is_minimal_cut_strategy(&Graph::path(21), &big), Err(Error::TooLarge { size: 21, bound: 20 }));
    }

    #[test]
    fn characterization_examples() {
        let g = figure1();
        assert!(minimality_conditions_hold(&g, &set(&g, &["3"])).unwrap());
        assert!(minimality_conditions_hold(&g, &set(&g, &["2"])).unwrap());
        assert!(!minimality_conditions_hold(&g, &set(&g, &["5", "6"])).unwrap());
        assert!(matches!(minimality_conditions_hold(&g, &set(&g, &["7"])), Err(Error::Precondition(_))));
    }
}
