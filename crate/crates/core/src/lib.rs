//! Neighbor-scattering number `S(G)` of graphs.
//!
//! Subverting a vertex set `X` deletes its closed neighborhood; `S(G)` is the
//! largest value of `ω(G/X) − |X|` over cut-strategies `X` that leave at
//! least one component, with `S(K_n) = 1`. This crate computes it
//! exhaustively for small graphs ([`oracle`]) and in polynomial time for
//! interval graphs ([`dp`]) by dynamic programming over the pieces of a
//! consecutive clique arrangement.
//!
//! ```
//! use nsn_core::{compute_nsn_from_intervals, generators, NsnOptions};
//!
//! let rep = generators::figure1();
//! let result = compute_nsn_from_intervals(&rep, &NsnOptions::default()).unwrap();
//! assert_eq!(result.value, 2);
//! ```

pub mod arrangement;
pub mod closed_forms;
pub mod dp;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod oracle;
pub mod recognition;
pub mod subversion;
pub mod validate;

pub use arrangement::{classify_piece, piece_components, piece_vertices, CliqueArrangement, Piece, PieceMark};
pub use dp::{
    candidate_cut_vertices, compute_nsn, compute_nsn_from_intervals, compute_nsn_with_arrangement, nsn_piece, Method,
    NsnOptions, NsnResult, PieceRecord, PieceTable,
};
pub use error::{Error, NotIntervalReason, Result};
pub use graph::{Graph, VertexSet};
pub use interval::{arrangement_from_intervals, graph_from_intervals, Interval, IntervalRepresentation};
pub use oracle::{brute_force_nsn, enumerate_minimal_cut_strategies, recursive_formula_value};
pub use recognition::{recognize_interval, Recognition};
pub use subversion::{
    closed_neighborhood, is_minimal_cut_strategy, minimality_conditions_hold, subvert, Classification,
    SubversionOutcome,
};
