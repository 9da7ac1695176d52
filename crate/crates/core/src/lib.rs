//! The great shadow `S(G)` of a graph adds, for every vertex `v`, a twin `v'`
//! adjacent to `v` and to every neighbour of `v`. `S(G)` is planar exactly
//! when `G` is a bipartite cactus. This crate decides that predicate with
//! certificates on both sides: a `K_{3,3}` subdivision in `S(G)` when it
//! fails, and a certified planar embedding and drawing when it holds. It
//! also models diode keyboard matrices, whose interrupt-pin wiring is `S(G)`.

pub mod blocks;
pub mod circuit;
pub mod cycles;
pub mod embedding;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod shadow;
pub mod theta;
pub mod witness;

pub use graph::{CyclePath, Graph, GraphError, Vertex};
pub use recognition::{classify, Verdict};
pub use shadow::{great_shadow, mycielskian, small_shadow, ShadowGraph, ShadowKind};
