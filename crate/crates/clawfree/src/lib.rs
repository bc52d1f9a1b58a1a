//! Strong stable sets in claw-free graphs.
//!
//! The crate detects the five forbidden structures whose absence makes a graph
//! innocent, finds the decompositions that drive the constructive argument, and
//! computes strong stable sets (stable sets meeting every maximal clique),
//! optionally containing a prescribed consistent set of safe vertices.

pub mod decompose;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod linegraph;
pub mod recognizers;
pub mod solver;
pub mod workbench;

pub use error::{Error, Result};
pub use graph::{Budget, Graph, Multigraph, Path, PathMode, VertexSet};
