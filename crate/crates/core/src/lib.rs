//! Exact connectivity-function machinery for small simple graphs.
//!
//! The crate covers four cut functions (vertex, edge, matching and rank
//! cuts), exact k-brittleness by branch and bound with an independent
//! brute-force oracle, local complementation and vertex-minor search,
//! linear rank-width by subset dynamic programming, and the small
//! combinatorial finders (Tutte bridges, sunflowers, monochromatic cliques,
//! bipartite trichotomy patterns, degree-or-induced-path) that the
//! structural arguments rely on.
//!
//! Vertex sets are single machine words, so every graph is capped at
//! [`MAX_VERTICES`] vertices. Everything here is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod brittleness;
pub mod conn;
mod error;
pub mod family;
pub mod finders;
pub mod gf2;
pub mod graph;
pub mod iso;
pub mod lrw;
pub mod set;
pub mod vertex_minor;

pub use error::{Error, Result};
pub use graph::{Graph, Reindexed, MAX_VERTICES};
pub use set::{Edge, EdgeSet, VertexSet};
