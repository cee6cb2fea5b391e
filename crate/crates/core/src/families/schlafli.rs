//! Membership in the induced subgraphs of the Schlaefli complement.

use alloc::vec::Vec;

use super::special::schlafli_complement;
use crate::embed::{find_rooted_induced_embedding, is_induced_embedding};
use crate::graph::Graph;

/// Common neighbours of an edge and of a non-edge in the Schlaefli
/// complement, which is strongly regular with parameters (27, 10, 1, 5).
const EDGE_COMMON: usize = 1;
const NON_EDGE_COMMON: usize = 5;

/// An induced embedding of `g` into the Schlaefli complement, as
/// `map[v] = host vertex`, or `None` if `g` is not Schlaefli-prismatic.
///
/// The host is vertex-transitive, so the first vertex placed is pinned to
/// host vertex 0.
pub fn is_schlafli_prismatic(g: &Graph) -> Option<Vec<usize>> {
    let host = schlafli_complement();
    if g.n() > host.n() {
        return None;
    }
    let identity: Vec<usize> = (0..g.n()).collect();
    if is_induced_embedding(g, &host, &identity) {
        return Some(identity);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let limit = if g.has_edge(u, v) { EDGE_COMMON } else { NON_EDGE_COMMON };
            if g.common_neighbor_count(u, v) > limit {
                return None;
            }
        }
    }
    if g.n() == 0 {
        return Some(Vec::new());
    }
    find_rooted_induced_embedding(g, &host, 0)
}
