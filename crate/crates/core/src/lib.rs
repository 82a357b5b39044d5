//! Kernel-perfect orientations and list coloring of circulant and dihedral Cayley graphs.
//!
//! The crate builds unitary Cayley graphs, their complements and dihedral Cayley graphs, orients
//! them from generator lists, checks kernel-perfectness exhaustively, colors from lists by
//! repeatedly coloring kernels, and decides choosability exactly with certificates.

pub mod cayley;
pub mod choosability;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod kernels;
pub mod list_coloring;
pub mod orientation;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use orientation::Digraph;
