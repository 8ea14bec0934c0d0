//! Tournament coloring toolkit.
//!
//! A tournament is a complete oriented graph; a k-coloring partitions its
//! vertices into k acyclic (equivalently, triangle-free) sets. This crate
//! implements:
//!
//! - the core representation with bitrow neighborhoods, verification,
//!   strongly connected components and shortest paths ([`tournament`]);
//! - exact exponential-time oracles for ground truth at small scale
//!   ([`oracle`]);
//! - the vertex-chain / path-decomposition machinery that colors a
//!   tournament with c+4d colors from a (c,d)-vertex chain
//!   ([`decomposition`]);
//! - heavy-arc analysis and light-tournament algorithms: the 5-coloring of
//!   2-colorable light tournaments and the 8-coloring of light tournaments
//!   ([`light`]);
//! - the top-level pipelines: 10-coloring of 2-colorable tournaments,
//!   O(√n)-coloring and the 50k graph reduction for 3-colorable
//!   tournaments, and the recursive k-colorable scheme ([`coloring`]);
//! - hardness constructions as verified instance generators
//!   ([`reductions`]);
//! - seeded instance generators ([`generators`]);
//! - file formats and a benchmark harness ([`formats`], [`mod@bench`]).

pub mod bench;
pub mod coloring;
pub mod decomposition;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod light;
pub mod oracle;
pub mod reductions;
mod seeded;
pub mod tournament;
pub mod vset;

pub use graph::Graph;
pub use hypergraph::Hypergraph3;
pub use tournament::{Coloring, PartialColoring, Tournament};
pub use vset::VertexSet;
