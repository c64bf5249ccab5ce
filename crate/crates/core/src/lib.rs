//! Exact exponential and fixed-parameter graph algorithms with supporting
//! graph model, generators and file I/O.
//!
//! The library is organised around a small [`graph::Graph`] type (directed or
//! undirected, stable integer vertex ids, string labels, deterministic
//! iteration). On top of it sit:
//!
//! - [`ops`]: classical toolbox operations (degrees, diameter, components,
//!   copies, subgraphs, merges),
//! - [`io`]: Pajek `.net` read/write, TGF read, GraphViz `.gv` write,
//! - [`gen`]: seeded random and structured generators,
//! - [`mis`]: maximum independent set solvers (greedy, brute force,
//!   max-degree branching, Moon–Moser, measure-and-conquer),
//! - [`mvc`]: minimum vertex cover heuristics and parameterized deciders,
//! - [`coloring`]: chromatic number and proper colorings,
//! - [`dfvs`]: directed feedback vertex set and circuit enumeration,
//! - [`separators`]: minimal ab-separator enumeration,
//! - [`bmatrix`]: distance-shell portrait of a graph.
//!
//! All solvers break ties by smallest vertex id, so returned sets (not just
//! their sizes) are reproducible.

pub mod bmatrix;
pub mod coloring;
pub mod dfvs;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod mis;
pub mod mvc;
pub mod ops;
pub mod separators;

mod bitgraph;

pub use error::{Error, Result};
pub use graph::{Graph, GraphKind, VertexId, VertexSet};
