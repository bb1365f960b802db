//! Consecutive clique arrangements and their pieces.
//!
//! Clique indices are 1-based: an arrangement holds `A_1..A_t`, and the
//! sentinels `A_0 = A_{t+1} = ∅` are implicit. The piece `P(l, r)` is
//! `(A_l ∪ … ∪ A_r) − (A_{l−1} ∪ A_{r+1})`, which by consecutiveness is the
//! set of vertices whose clique span lies inside `[l, r]`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueArrangement {
    n: usize,
    cliques: Vec<VertexSet>,
    separators: Vec<VertexSet>,
    spans: Vec<(usize, usize)>,
}

impl CliqueArrangement {
    /// Validates coverage of `0..n`, consecutiveness, and distinctness.
    /// Maximality needs the graph; see [`CliqueArrangement::check_maximal`].
    pub fn new(n: usize, cliques: Vec<VertexSet>) -> Result<CliqueArrangement> {
        let mut spans: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut distinct = HashSet::with_capacity(cliques.len());
        for (i, clique) in cliques.iter().enumerate() {
            let k = i + 1;
            if clique.is_empty() {
                return Err(Error::InvalidArrangement(format!("clique {k} is empty")));
            }
            if !distinct.insert(clique) {
                return Err(Error::InvalidArrangement(format!("clique {k} repeats an earlier clique")));
            }
            for v in clique.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                spans[v] = match spans[v] {
                    None => Some((k, k)),
                    Some((l, r)) if r + 1 == k => Some((l, k)),
                    Some(_) => {
                        return Err(Error::InvalidArrangement(format!(
                            "cliques containing vertex {v} are not consecutive"
                        )))
                    }
                };
            }
        }
        let spans = spans
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::InvalidArrangement(format!("vertex {v} lies in no clique"))))
            .collect::<Result<Vec<_>>>()?;
        let separators = cliques.windows(2).map(|w| w[0].intersection(&w[1])).collect();
        Ok(CliqueArrangement { n, cliques, separators, spans })
    }

    /// Checks that every clique is a maximal clique of `g` and that there
    /// are at most `n` of them.
    pub fn check_maximal(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() != self.n {
            return Err(Error::InvalidArrangement("vertex count differs from the graph".into()));
        }
        if self.cliques.len() > self.n.max(1) {
            return Err(Error::InvalidArrangement(format!("{} cliques on {} vertices", self.cliques.len(), self.n)));
        }
        for (i, clique) in self.cliques.iter().enumerate() {
            if !g.is_clique(clique) {
                return Err(Error::InvalidArrangement(format!("clique {} is not complete", i + 1)));
            }
            let extendable =
                (0..self.n).filter(|&u| !clique.contains(u)).any(|u| clique.iter().all(|c| g.has_edge(u, c)));
            if extendable {
                return Err(Error::InvalidArrangement(format!("clique {} is not maximal", i + 1)));
            }
        }
        // Every edge must be covered by some clique.
        for (u, v) in g.edges() {
            let (lu, ru) = self.spans[u];
            let (lv, rv) = self.spans[v];
            if lu.max(lv) > ru.min(rv) {
                return Err(Error::InvalidArrangement(format!("edge {u}-{v} lies in no clique")));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of cliques `t`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// `A_k` for `1 ≤ k ≤ t`.
    pub fn clique(&self, k: usize) -> &VertexSet {
        &self.cliques[k - 1]
    }

    /// `S_1..S_{t−1}`, where `S_p = A_p ∩ A_{p+1}`.
    pub fn separators(&self) -> &[VertexSet] {
        &self.separators
    }

    /// `S_p` for `1 ≤ p < t`.
    pub fn separator(&self, p: usize) -> &VertexSet {
        &self.separators[p - 1]
    }

    /// `(l(v), r(v))`: first and last clique index containing `v`.
    pub fn span(&self, v: usize) -> (usize, usize) {
        self.spans[v]
    }

    pub fn spans(&self) -> &[(usize, usize)] {
        &self.spans
    }

    pub fn reversed(&self) -> CliqueArrangement {
        let mut cliques = self.cliques.clone();
        cliques.reverse();
        CliqueArrangement::new(self.n, cliques).expect("reversal keeps consecutiveness")
    }

    fn check_range(&self, l: usize, r: usize) -> Result<()> {
        if l < 1 || l > r || r > self.len() {
            return Err(Error::PieceOutOfRange { l, r, t: self.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub l: usize,
    pub r: usize,
    pub vertices: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceMark {
    EmptyPiece,
    Complete,
    Noncomplete,
    DisconnectedPiece,
}

/// `P(l, r)` evaluated from its defining union and difference.
pub fn piece_vertices(arr: &CliqueArrangement, l: usize, r: usize) -> Result<Piece> {
    arr.check_range(l, r)?;
    let mut covered = VertexSet::new();
    for k in l..=r {
        covered.extend_from(arr.clique(k));
    }
    let mut outside = VertexSet::new();
    if l > 1 {
        outside.extend_from(arr.clique(l - 1));
    }
    if r < arr.len() {
        outside.extend_from(arr.clique(r + 1));
    }
    Ok(Piece { l, r, vertices: covered.difference(&outside) })
}

pub(crate) fn mark_of(g: &Graph, vertices: &VertexSet) -> PieceMark {
    if vertices.is_empty() {
        PieceMark::EmptyPiece
    } else if g.is_clique(vertices) {
        PieceMark::Complete
    } else if g.components_of(vertices).len() == 1 {
        PieceMark::Noncomplete
    } else {
        PieceMark::DisconnectedPiece
    }
}

pub fn classify_piece(arr: &CliqueArrangement, g: &Graph, l: usize, r: usize) -> Result<PieceMark> {
    let piece = piece_vertices(arr, l, r)?;
    Ok(mark_of(g, &piece.vertices))
}

/// Splits `vs` into connected components and names each component `C` by
/// the piece `P(l(C), r(C))`, where `l(C)` and `r(C)` are the extreme clique
/// indices over its members. A component that differs from its piece is
/// reported as [`Error::PieceMismatch`].
pub fn piece_components(arr: &CliqueArrangement, g: &Graph, vs: &VertexSet) -> Result<Vec<Piece>> {
    g.check_set(vs)?;
    let mut pieces = Vec::new();
    for component in g.components_of(vs) {
        let l = component.iter().map(|v| arr.span(v).0).min().expect("nonempty component");
        let r = component.iter().map(|v| arr.span(v).1).max().expect("nonempty component");
        let piece = piece_vertices(arr, l, r)?;
        if piece.vertices != component {
            return Err(Error::PieceMismatch { l, r });
        }
        pieces.push(piece);
    }
    Ok(pieces)
}

/// Precomputed piece sizes and span buckets for fast piece queries.
#[derive(Debug, Clone)]
pub(crate) struct PieceIndex {
    t: usize,
    spans: Vec<(usize, usize)>,
    sizes: Vec<usize>,
}

impl PieceIndex {
    pub(crate) fn new(arr: &CliqueArrangement) -> PieceIndex {
        let t = arr.len();
        // count[l][r] of vertices with span exactly (l, r), then a 2-D
        // suffix/prefix sum gives |{v : l ≤ l(v), r(v) ≤ r}|.
        let mut sizes = vec![0usize; (t + 2) * (t + 2)];
        let at = |l: usize, r: usize| l * (t + 2) + r;
        for &(l, r) in arr.spans() {
            sizes[at(l, r)] += 1;
        }
        for l in (1..=t).rev() {
            for r in 1..=t {
                let mut s = sizes[at(l, r)];
                s += sizes[at(l + 1, r)];
                s += sizes[at(l, r - 1)];
                s -= sizes[at(l + 1, r - 1)];
                sizes[at(l, r)] = s;
            }
        }
        PieceIndex { t, spans: arr.spans().to_vec(), sizes }
    }

    pub(crate) fn size(&self, l: usize, r: usize) -> usize {
        if l > r {
            return 0;
        }
        self.sizes[l * (self.t + 2) + r]
    }

    pub(crate) fn members(&self, l: usize, r: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.spans.len());
        for (v, &(lv, rv)) in self.spans.iter().enumerate() {
            if l <= lv && rv <= r {
                bits.insert(v);
            }
        }
        bits
    }

    pub(crate) fn span(&self, v: usize) -> (usize, usize) {
        self.spans[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{arrangement_from_intervals, graph_from_intervals, IntervalRepresentation};
    use crate::subversion::subvert;

    fn figure1() -> (Graph, CliqueArrangement) {
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
        (graph_from_intervals(&rep), arrangement_from_intervals(&rep))
    }

    fn labels(g: &Graph, s: &[&str]) -> VertexSet {
        g.vertex_set(s).unwrap()
    }

    #[test]
    fn figure1_pieces() {
        let (g, arr) = figure1();
        assert_eq!(piece_vertices(&arr, 1, 5).unwrap().vertices, g.all_vertices());
        assert_eq!(piece_vertices(&arr, 2, 3).unwrap().vertices, labels(&g, &["3", "4", "6"]));
        assert_eq!(piece_vertices(&arr, 1, 1).unwrap().vertices, labels(&g, &["1"]));
        assert_eq!(piece_vertices(&arr, 0, 1), Err(Error::PieceOutOfRange { l: 0, r: 1, t: 5 }));
        assert_eq!(piece_vertices(&arr, 3, 2), Err(Error::PieceOutOfRange { l: 3, r: 2, t: 5 }));
        assert_eq!(piece_vertices(&arr, 4, 6), Err(Error::PieceOutOfRange { l: 4, r: 6, t: 5 }));
    }

    #[test]
    fn figure1_marks() {
        let (g, arr) = figure1();
        assert_eq!(classify_piece(&arr, &g, 1, 1).unwrap(), PieceMark::Complete);
        assert_eq!(classify_piece(&arr, &g, 1, 5).unwrap(), PieceMark::Noncomplete);
        assert_eq!(classify_piece(&arr, &g, 2, 3).unwrap(), PieceMark::Noncomplete);
        // P(3,3) = {2,4,5,6} − ({2,3,4} ∪ {5,7}) = {6}
        assert_eq!(classify_piece(&arr, &g, 3, 3).unwrap(), PieceMark::Complete);
        // P(2,2) = {2,3,4} − ({1,2} ∪ {2,4,5,6}) = {3}
        assert_eq!(piece_vertices(&arr, 2, 2).unwrap().vertices, labels(&g, &["3"]));
        // P(1,3) = {1,2,3,4,5,6} − {5,7} = {1,2,3,4,6}; connected, 1-3 missing
        assert_eq!(classify_piece(&arr, &g, 1, 3).unwrap(), PieceMark::Noncomplete);
    }

    #[test]
    fn disconnected_piece_mark() {
        // Two disjoint edges: cliques {1,2}, {3,4}; P(1,2) is everything.
        let rep = IntervalRepresentation::numbered(&[(0, 1), (1, 2), (5, 6), (6, 7)]).unwrap();
        let g = graph_from_intervals(&rep);
        let arr = arrangement_from_intervals(&rep);
        assert_eq!(classify_piece(&arr, &g, 1, 2).unwrap(), PieceMark::DisconnectedPiece);
        // Path 1-2-3: P(2,2) = {2,3} − {1,2} = {3}... and P(1,1) = {1}.
        let p3 = IntervalRepresentation::numbered(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let arr = arrangement_from_intervals(&p3);
        let g = graph_from_intervals(&p3);
        assert_eq!(arr.len(), 2);
        assert_eq!(classify_piece(&arr, &g, 1, 1).unwrap(), PieceMark::Complete);
    }

    #[test]
    fn empty_piece_mark() {
        // Path 1-2-3-4: cliques {1,2}, {2,3}, {3,4}; P(2,2) = {2,3} − ({1,2} ∪ {3,4}) = ∅.
        let rep = IntervalRepresentation::numbered(&[(0, 1), (1, 3), (2, 4), (4, 5)]).unwrap();
        let arr = arrangement_from_intervals(&rep);
        let g = graph_from_intervals(&rep);
        assert_eq!(arr.len(), 3);
        assert_eq!(classify_piece(&arr, &g, 2, 2).unwrap(), PieceMark::EmptyPiece);
        assert_eq!(classify_piece(&arr, &g, 1, 2).unwrap(), PieceMark::Complete);
    }

    #[test]
    fn components_of_survivors_are_pieces() {
        let (g, arr) = figure1();
        let survivors = subvert(&g, &labels(&g, &["5"])).unwrap().survivors;
        let pieces = piece_components(&arr, &g, &survivors).unwrap();
        let spans: Vec<(usize, usize)> = pieces.iter().map(|p| (p.l, p.r)).collect();
        assert_eq!(spans, vec![(1, 1), (2, 2), (5, 5)]);
        assert!(piece_components(&arr, &g, &VertexSet::new()).unwrap().is_empty());

        // N[3] = {2,3,4}: survivors {1} and {5,6,7,8}; 5 and 6 reach back to A_3.
        let survivors = subvert(&g, &labels(&g, &["3"])).unwrap().survivors;
        let pieces = piece_components(&arr, &g, &survivors).unwrap();
        let got: Vec<(usize, usize, VertexSet)> = pieces.into_iter().map(|p| (p.l, p.r, p.vertices)).collect();
        assert_eq!(got, vec![(1, 1, labels(&g, &["1"])), (3, 5, labels(&g, &["5", "6", "7", "8"]))]);
    }

    #[test]
    fn mismatch_is_reported() {
        let (g, arr) = figure1();
        // An arbitrary set need not split into pieces: vertex 4 alone spans
        // (2,3), but P(2,3) = {3,4,6}.
        let vs = labels(&g, &["4"]);
        assert_eq!(piece_components(&arr, &g, &vs), Err(Error::PieceMismatch { l: 2, r: 3 }));
    }

    #[test]
    fn arrangement_validation() {
        assert!(matches!(
            CliqueArrangement::new(3, vec![[0, 1].into(), [1, 2].into(), [0, 2].into()]),
            Err(Error::InvalidArrangement(_))
        ));
        assert!(matches!(
            CliqueArrangement::new(3, vec![[0, 1].into(), [0, 1].into(), [2].into()]),
            Err(Error::InvalidArrangement(_))
        ));
        assert!(matches!(CliqueArrangement::new(3, vec![[0, 1].into()]), Err(Error::InvalidArrangement(_))));
        let (g, arr) = figure1();
        assert!(arr.check_maximal(&g).is_ok());
        assert_eq!(arr.span(g.vertex("2").unwrap()), (1, 3));
        let not_max = CliqueArrangement::new(3, vec![[0].into(), [0, 1, 2].into()]).unwrap();
        assert!(not_max.check_maximal(&Graph::complete(3)).is_err());
    }

    #[test]
    fn piece_index_matches_formula() {
        let (_, arr) = figure1();
        let index = PieceIndex::new(&arr);
        for l in 1..=arr.len() {
            for r in l..=arr.len() {
                let piece = piece_vertices(&arr, l, r).unwrap();
                assert_eq!(index.size(l, r), piece.vertices.len());
                assert_eq!(VertexSet::from_bitset(&index.members(l, r)), piece.vertices);
            }
        }
    }
}
