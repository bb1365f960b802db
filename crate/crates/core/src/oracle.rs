//! Exhaustive ground truth for small graphs.
//!
//! Everything here enumerates vertex subsets as `u64` masks, so graphs are
//! limited to [`MASK_LIMIT`] vertices regardless of the configured bound.

use std::collections::HashMap;

use crate::dp::{Method, NsnResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex bound for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 20;
/// Hard ceiling imposed by the mask representation and running time.
pub const MASK_LIMIT: usize = 30;

/// Adjacency of a small graph as bit masks.
#[derive(Debug, Clone)]
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph) -> MaskGraph {
        let adj = (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect();
        MaskGraph { n: g.vertex_count(), adj }
    }

    /// Subgraph induced by `set`, relabeled to `0..|set|`, with the map back.
    fn induced(&self, set: u64) -> (MaskGraph, Vec<usize>) {
        let map: Vec<usize> = (0..self.n).filter(|&v| set >> v & 1 == 1).collect();
        let adj = map
            .iter()
            .map(|&u| {
                map.iter().enumerate().filter(|&(_, &w)| self.adj[u] >> w & 1 == 1).fold(0u64, |m, (i, _)| m | (1 << i))
            })
            .collect();
        (MaskGraph { n: map.len(), adj }, map)
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn closed_neighborhood(&self, xs: u64) -> u64 {
        let mut out = xs;
        let mut rest = xs;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            out |= self.adj[v];
            rest &= rest - 1;
        }
        out
    }

    fn components(&self, set: u64) -> Vec<u64> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & set & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn is_clique(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[v] | (1 << v)) & set != set {
                return false;
            }
        }
        true
    }

    /// Components of `G/X` and whether `X` is a cut-strategy.
    fn subvert(&self, xs: u64) -> (Vec<u64>, bool) {
        let survivors = self.full() & !self.closed_neighborhood(xs);
        let comps = self.components(survivors);
        let cut = match comps.len() {
            0 => true,
            1 => self.is_clique(comps[0]),
            _ => true,
        };
        (comps, cut)
    }

    /// All minimal cut-strategies, as masks, in increasing size then
    /// lexicographic order of their sorted members.
    fn minimal_cut_strategies(&self) -> Vec<u64> {
        let size = 1usize << self.n;
        // covered[X]: some proper subset of X is a cut-strategy.
        let mut covered = vec![false; size];
        let mut is_cut = vec![false; size];
        let mut minimal = Vec::new();
        for x in 0..size as u64 {
            let mut rest = x;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                rest ^= low;
                let y = (x ^ low) as usize;
                if is_cut[y] || covered[y] {
                    covered[x as usize] = true;
                    break;
                }
            }
            is_cut[x as usize] = self.subvert(x).1;
            if is_cut[x as usize] && !covered[x as usize] {
                minimal.push(x);
            }
        }
        minimal.sort_by_key(|&m| (m.count_ones(), sorted_members(m)));
        minimal
    }
}

fn sorted_members(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    out
}

fn check_input(g: &Graph, max_n: usize) -> Result<()> {
    let bound = max_n.min(MASK_LIMIT);
    if g.vertex_count() > bound {
        return Err(Error::TooLarge { size: g.vertex_count(), bound });
    }
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `S(G)` straight from its definition, over all `2^n` strategies.
pub fn brute_force_nsn(g: &Graph) -> Result<NsnResult> {
    brute_force_nsn_bounded(g, DEFAULT_MAX_N)
}

pub fn brute_force_nsn_bounded(g: &Graph, max_n: usize) -> Result<NsnResult> {
    check_input(g, max_n)?;
    if g.is_complete() {
        return Ok(NsnResult::new(1, VertexSet::new(), None, Method::Oracle));
    }
    let mg = MaskGraph::new(g);
    let mut best: Option<(i64, u64)> = None;
    for x in 0..=mg.full() {
        let (comps, cut) = mg.subvert(x);
        if !cut || comps.is_empty() {
            continue;
        }
        let score = comps.len() as i64 - x.count_ones() as i64;
        let better = match best {
            None => true,
            Some((b, bx)) => score > b || (score == b && x.count_ones() < bx.count_ones()),
        };
        if better {
            best = Some((score, x));
        }
    }
    let (value, x) = best.ok_or(Error::NoAdmissibleStrategy)?;
    Ok(NsnResult::new(value, VertexSet::from_mask(x), None, Method::Oracle))
}

/// Every minimal cut-strategy of `g`, smallest first. Strategies whose
/// survival graph is empty are included.
pub fn enumerate_minimal_cut_strategies(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_cut_strategies_bounded(g, DEFAULT_MAX_N)
}

pub fn enumerate_minimal_cut_strategies_bounded(g: &Graph, max_n: usize) -> Result<Vec<VertexSet>> {
    check_input(g, max_n)?;
    Ok(MaskGraph::new(g).minimal_cut_strategies().into_iter().map(VertexSet::from_mask).collect())
}

/// Evaluates the recursion over minimal cut-strategies:
/// `max over X* with ω(G/X*) ≥ 1 of Σ_C max{S(G[C]), 1} − |X*|`, where the
/// sum runs over the components `C` of `G/X*` and `S(G[C])` is obtained by
/// the same recursion (complete components score 1). Memoized on the
/// component vertex set.
pub fn recursive_formula_value(g: &Graph) -> Result<i64> {
    recursive_formula_value_bounded(g, DEFAULT_MAX_N)
}

pub fn recursive_formula_value_bounded(g: &Graph, max_n: usize) -> Result<i64> {
    check_input(g, max_n)?;
    if g.is_complete() {
        return Err(Error::Precondition("the recursion applies to non-complete graphs".into()));
    }
    let mg = MaskGraph::new(g);
    let mut memo = HashMap::new();
    formula(&mg, mg.full(), &mut memo)
}

fn formula(g: &MaskGraph, set: u64, memo: &mut HashMap<u64, i64>) -> Result<i64> {
    if let Some(&v) = memo.get(&set) {
        return Ok(v);
    }
    let value = if g.is_clique(set) {
        1
    } else {
        let (sub, map) = g.induced(set);
        let lift = |local: u64| sorted_members(local).into_iter().fold(0u64, |m, i| m | (1 << map[i as usize]));
        let mut best: Option<i64> = None;
        for x in sub.minimal_cut_strategies() {
            let (comps, _) = sub.subvert(x);
            if comps.is_empty() {
                continue;
            }
            let mut total = -(x.count_ones() as i64);
            for c in comps {
                total += formula(g, lift(c), memo)?.max(1);
            }
            best = Some(best.map_or(total, |b: i64| b.max(total)));
        }
        best.ok_or(Error::NoAdmissibleStrategy)?
    };
    memo.insert(set, value);
    Ok(value)
}
