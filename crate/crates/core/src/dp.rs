//! Neighbor-scattering number of interval graphs by dynamic programming
//! over the pieces of a consecutive clique arrangement.
//!
//! Every piece `P(l, r)` is marked empty, complete, noncomplete, or
//! disconnected. Complete pieces score 1. A disconnected piece scores the
//! sum of `max{S(C), 1}` over its component pieces. A noncomplete piece
//! scores
//!
//! ```text
//! max over v in P with P/v disconnected or a nonempty clique of
//!     Σ_{C component of P/v} max{S(C), 1} − 1
//! ```
//!
//! where every component `C` is again a piece of strictly smaller width, so
//! evaluating pieces by increasing `r − l` never reads an unset entry.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{CliqueArrangement, Piece, PieceIndex, PieceMark};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::{arrangement_from_intervals, graph_from_intervals, IntervalRepresentation};
use crate::oracle;
use crate::recognition::{recognize_interval, Recognition};
use crate::subversion::Classification;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "interval-dp")]
    IntervalDp,
    #[serde(rename = "oracle")]
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::IntervalDp => f.write_str("interval-dp"),
            Method::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct NsnOptions {
    /// Substitute the exhaustive value for a piece with no single-vertex
    /// cut-strategy instead of failing.
    pub fallback_oracle: bool,
    /// Worker threads for pieces of equal width; 0 or 1 runs serially.
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceRecord {
    pub l: usize,
    pub r: usize,
    pub mark: PieceMark,
    pub vertices: VertexSet,
    pub value: Option<i64>,
    pub witness: Option<VertexSet>,
    /// Maximizing vertex of a noncomplete piece.
    pub choice: Option<usize>,
    /// Component pieces: of the piece itself when disconnected, of the
    /// survivors of `choice` when noncomplete.
    pub children: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub fallback: bool,
}

/// Per-piece marks and values, stored for `1 ≤ l ≤ r ≤ t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceTable {
    t: usize,
    records: Vec<PieceRecord>,
}

impl PieceTable {
    /// Marks every piece; values stay unset.
    pub fn marked(g: &Graph, arr: &CliqueArrangement) -> Result<PieceTable> {
        if arr.vertex_count() != g.vertex_count() {
            return Err(Error::InvalidArrangement("vertex count differs from the graph".into()));
        }
        let index = PieceIndex::new(arr);
        let t = arr.len();
        let mut records = Vec::with_capacity(t * (t + 1) / 2);
        for l in 1..=t {
            for r in l..=t {
                let members = index.members(l, r);
                let (mark, children) = if members.is_clear() {
                    (PieceMark::EmptyPiece, Vec::new())
                } else if g.is_clique_bits(&members) {
                    (PieceMark::Complete, Vec::new())
                } else {
                    let comps = g.component_bits(&members);
                    if comps.len() == 1 {
                        (PieceMark::Noncomplete, Vec::new())
                    } else {
                        let children = comps.iter().map(|c| span_piece(&index, c)).collect::<Result<Vec<_>>>()?;
                        (PieceMark::DisconnectedPiece, children)
                    }
                };
                records.push(PieceRecord {
                    l,
                    r,
                    mark,
                    vertices: VertexSet::from_bitset(&members),
                    value: None,
                    witness: None,
                    choice: None,
                    children,
                    fallback: false,
                });
            }
        }
        Ok(PieceTable { t, records })
    }

    pub fn clique_count(&self) -> usize {
        self.t
    }

    fn slot(&self, l: usize, r: usize) -> Option<usize> {
        (1 <= l && l <= r && r <= self.t).then(|| {
            // rows of lengths t, t-1, ... before row l
            (l - 1) * (2 * self.t - l + 2) / 2 + (r - l)
        })
    }

    pub fn get(&self, l: usize, r: usize) -> Option<&PieceRecord> {
        self.slot(l, r).map(|i| &self.records[i])
    }

    fn get_mut(&mut self, l: usize, r: usize) -> Option<&mut PieceRecord> {
        self.slot(l, r).map(move |i| &mut self.records[i])
    }

    pub fn value(&self, l: usize, r: usize) -> Option<i64> {
        self.get(l, r).and_then(|rec| rec.value)
    }

    pub fn records(&self) -> &[PieceRecord] {
        &self.records
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NsnResult {
    pub value: i64,
    pub witness: VertexSet,
    #[serde(skip)]
    pub table: Option<PieceTable>,
    pub method: Method,
    /// Notable events, such as pieces evaluated by the exhaustive fallback.
    pub events: Vec<String>,
}

impl NsnResult {
    pub(crate) fn new(value: i64, witness: VertexSet, table: Option<PieceTable>, method: Method) -> NsnResult {
        NsnResult { value, witness, table, method, events: Vec::new() }
    }
}

/// Maps a component to the piece of its clique span, checking that the two
/// coincide. Given `C ⊆ P(l(C), r(C))`, equal sizes mean equal sets.
fn span_piece(index: &PieceIndex, component: &FixedBitSet) -> Result<(usize, usize)> {
    let (mut l, mut r) = (usize::MAX, 0);
    for v in component.ones() {
        let (lv, rv) = index.span(v);
        l = l.min(lv);
        r = r.max(rv);
    }
    if index.size(l, r) != component.count_ones(..) {
        return Err(Error::PieceMismatch { l, r });
    }
    Ok((l, r))
}

/// Outcome of subverting one vertex inside a piece.
struct LocalSubversion {
    classification: Classification,
    children: Vec<(usize, usize)>,
}

struct Evaluator<'a> {
    g: &'a Graph,
    index: PieceIndex,
    options: &'a NsnOptions,
}

enum EvalError {
    Missing(usize, usize),
    Failed(Error),
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Failed(e)
    }
}

#[derive(Debug)]
struct Evaluated {
    value: i64,
    witness: VertexSet,
    choice: Option<usize>,
    children: Vec<(usize, usize)>,
    fallback: bool,
}

impl<'a> Evaluator<'a> {
    fn new(g: &'a Graph, arr: &CliqueArrangement, options: &'a NsnOptions) -> Evaluator<'a> {
        Evaluator { g, index: PieceIndex::new(arr), options }
    }

    /// Subverts `v` inside the piece with members `members`.
    fn subvert_in_piece(&self, members: &FixedBitSet, v: usize, table: &PieceTable) -> Result<LocalSubversion> {
        let mut survivors = members.clone();
        survivors.difference_with(self.g.row(v));
        survivors.set(v, false);
        let comps = self.g.component_bits(&survivors);
        let children = comps.iter().map(|c| span_piece(&self.index, c)).collect::<Result<Vec<_>>>()?;
        let classification = match children.as_slice() {
            [] => Classification::Empty,
            [(l, r)] => {
                let mark = table.get(*l, *r).expect("child span within range").mark;
                if mark == PieceMark::Complete {
                    Classification::Clique
                } else {
                    Classification::NotCutStrategy
                }
            }
            _ => Classification::Disconnected,
        };
        Ok(LocalSubversion { classification, children })
    }

    fn child_contribution(
        &self,
        children: &[(usize, usize)],
        table: &PieceTable,
    ) -> std::result::Result<(i64, VertexSet), EvalError> {
        let mut total = 0;
        let mut witness = VertexSet::new();
        for &(cl, cr) in children {
            let rec = table.get(cl, cr).expect("child span within range");
            let value = rec.value.ok_or(EvalError::Missing(cl, cr))?;
            if value > 1 {
                witness.extend_from(rec.witness.as_ref().expect("valued pieces carry witnesses"));
            }
            total += value.max(1);
        }
        Ok((total, witness))
    }

    fn evaluate(&self, l: usize, r: usize, table: &PieceTable) -> std::result::Result<Evaluated, EvalError> {
        let rec = table.get(l, r).expect("piece within range");
        match rec.mark {
            PieceMark::EmptyPiece => Err(EvalError::Failed(Error::Precondition(format!("piece ({l}, {r}) is empty")))),
            PieceMark::Complete => Ok(Evaluated {
                value: 1,
                witness: VertexSet::new(),
                choice: None,
                children: Vec::new(),
                fallback: false,
            }),
            PieceMark::DisconnectedPiece => {
                let (value, witness) = self.child_contribution(&rec.children, table)?;
                Ok(Evaluated { value, witness, choice: None, children: rec.children.clone(), fallback: false })
            }
            PieceMark::Noncomplete => {
                let members = self.index.members(l, r);
                let mut best: Option<Evaluated> = None;
                for v in members.ones() {
                    let local = self.subvert_in_piece(&members, v, table)?;
                    if !local.classification.is_admissible() {
                        continue;
                    }
                    let (total, mut witness) = self.child_contribution(&local.children, table)?;
                    let value = total - 1;
                    if best.as_ref().is_none_or(|b| value > b.value) {
                        witness.insert(v);
                        best = Some(Evaluated {
                            value,
                            witness,
                            choice: Some(v),
                            children: local.children,
                            fallback: false,
                        });
                    }
                }
                match best {
                    Some(b) => Ok(b),
                    None if self.options.fallback_oracle => {
                        let (sub, map) = self.g.induced_subgraph(&rec.vertices);
                        let res = oracle::brute_force_nsn(&sub)?;
                        let witness = res.witness.iter().map(|i| map[i]).collect();
                        Ok(Evaluated { value: res.value, witness, choice: None, children: Vec::new(), fallback: true })
                    }
                    None => Err(EvalError::Failed(Error::CharacterizationGap { l, r })),
                }
            }
        }
    }

    fn store(table: &mut PieceTable, l: usize, r: usize, ev: Evaluated) -> i64 {
        let rec = table.get_mut(l, r).expect("piece within range");
        rec.value = Some(ev.value);
        rec.witness = Some(ev.witness);
        rec.choice = ev.choice;
        if rec.mark == PieceMark::Noncomplete {
            rec.children = ev.children;
        }
        rec.fallback = ev.fallback;
        ev.value
    }

    /// Bottom-up over widths `d = r − l`.
    fn fill(&self, table: &mut PieceTable, events: &mut Vec<String>) -> Result<()> {
        let t = table.clique_count();
        let pool = if self.options.threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(self.options.threads)
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        for d in 0..t {
            let pending: Vec<usize> = (1..=t - d)
                .filter(|&l| table.get(l, l + d).is_some_and(|rec| rec.mark != PieceMark::EmptyPiece))
                .collect();
            let eval = |l: usize| (l, self.evaluate(l, l + d, table));
            let results: Vec<_> = match &pool {
                Some(pool) => pool.install(|| pending.par_iter().map(|&l| eval(l)).collect()),
                None => pending.iter().map(|&l| eval(l)).collect(),
            };
            for (l, res) in results {
                match res {
                    Ok(ev) => {
                        if ev.fallback {
                            log::warn!("piece ({l}, {}) evaluated exhaustively", l + d);
                            events
                                .push(format!("characterization-gap at piece ({l}, {}); exhaustive value used", l + d));
                        }
                        Self::store(table, l, l + d, ev);
                    }
                    Err(EvalError::Missing(cl, cr)) => {
                        unreachable!("piece ({l}, {}) read unset entry ({cl}, {cr})", l + d)
                    }
                    Err(EvalError::Failed(e)) => return Err(e),
                }
            }
        }
        Ok(())
    }

    /// Top-down with memoization in `table`.
    fn ensure(&self, l: usize, r: usize, table: &mut PieceTable) -> Result<i64> {
        if let Some(v) = table.value(l, r) {
            return Ok(v);
        }
        loop {
            match self.evaluate(l, r, table) {
                Ok(ev) => return Ok(Self::store(table, l, r, ev)),
                Err(EvalError::Missing(cl, cr)) => {
                    self.ensure(cl, cr, table)?;
                }
                Err(EvalError::Failed(e)) => return Err(e),
            }
        }
    }
}

/// Vertices `v` of a connected, non-complete piece whose subversion inside
/// the piece leaves a disconnected graph, a clique, or nothing.
pub fn candidate_cut_vertices(g: &Graph, arr: &CliqueArrangement, p: &Piece) -> Result<Vec<usize>> {
    let table = PieceTable::marked(g, arr)?;
    let rec = table.get(p.l, p.r).ok_or(Error::PieceOutOfRange { l: p.l, r: p.r, t: arr.len() })?;
    if rec.mark != PieceMark::Noncomplete {
        return Err(Error::Precondition(format!("piece ({}, {}) must be connected and not complete", p.l, p.r)));
    }
    let options = NsnOptions::default();
    let ev = Evaluator::new(g, arr, &options);
    let members = ev.index.members(p.l, p.r);
    let mut out = Vec::new();
    for v in members.ones() {
        if ev.subvert_in_piece(&members, v, &table)?.classification.is_cut_strategy() {
            out.push(v);
        }
    }
    Ok(out)
}

/// `S(G[P])` for one nonempty piece, memoized in `table` (which must come
/// from [`PieceTable::marked`] on the same graph and arrangement).
pub fn nsn_piece(
    g: &Graph,
    arr: &CliqueArrangement,
    p: &Piece,
    table: &mut PieceTable,
    options: &NsnOptions,
) -> Result<i64> {
    if table.get(p.l, p.r).is_none() {
        return Err(Error::PieceOutOfRange { l: p.l, r: p.r, t: table.clique_count() });
    }
    Evaluator::new(g, arr, options).ensure(p.l, p.r, table)
}

/// `S(G)` for a connected interval graph given with a consecutive clique
/// arrangement.
pub fn compute_nsn_with_arrangement(g: &Graph, arr: &CliqueArrangement, options: &NsnOptions) -> Result<NsnResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut table = PieceTable::marked(g, arr)?;
    let mut events = Vec::new();
    Evaluator::new(g, arr, options).fill(&mut table, &mut events)?;
    let top = table.get(1, arr.len()).expect("nonempty arrangement");
    let value = top.value.expect("whole graph is a nonempty piece");
    let witness = top.witness.clone().unwrap_or_default();
    let mut result = NsnResult::new(value, witness, Some(table), Method::IntervalDp);
    result.events = events;
    Ok(result)
}

/// `S(G)` for a connected graph that must be recognized as an interval graph.
pub fn compute_nsn(g: &Graph, options: &NsnOptions) -> Result<NsnResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match recognize_interval(g) {
        Recognition::Interval(arr) => compute_nsn_with_arrangement(g, &arr, options),
        Recognition::NotInterval(reason) => Err(Error::NotInterval(reason)),
    }
}

/// `S(G)` for the intersection graph of `rep`; the arrangement comes from
/// the endpoint sweep, so no recognition is needed.
pub fn compute_nsn_from_intervals(rep: &IntervalRepresentation, options: &NsnOptions) -> Result<NsnResult> {
    let g = graph_from_intervals(rep);
    let arr = arrangement_from_intervals(rep);
    compute_nsn_with_arrangement(&g, &arr, options)
}
