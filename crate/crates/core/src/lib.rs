//! Minimum clique covers of co-bridge-free prismatic graphs.
//!
//! A graph is prismatic if every vertex outside a triangle has exactly one
//! neighbour in it. When such a graph also excludes the co-bridge (a
//! four-cycle plus two isolated vertices), either a set of at most five
//! vertices meets every triangle, or the graph is an induced subgraph of the
//! complement of the Schlaefli graph. [`covering::clique_cover`] exploits
//! this: it enumerates the triangle packings pinned by the small hitting set
//! and completes each with a maximum matching.
//!
//! Besides the cover itself the crate carries recognisers with checkable
//! certificates ([`recognition`]), generators for the structured families
//! these graphs decompose into ([`families`]) and exponential oracles used
//! to cross-check results on small inputs.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod covering;
pub mod embed;
pub mod families;
pub mod graph;
pub mod recognition;

pub use graph::{Graph, GraphBuilder, GraphError, Triangle, VertexSet};
