//! Exact minimum clique cover by branch and bound, for small K4-free graphs.

use alloc::vec::Vec;

use super::matching::max_matching_within;
use super::{CliqueCover, CoveringError, OracleLimits};
use crate::bitset::BitSet;
use crate::graph::{Graph, Triangle};
use crate::recognition::{find_induced, Pattern};

struct Search<'a> {
    g: &'a Graph,
    undecided: BitSet,
    marked: BitSet,
    chosen: Vec<Triangle>,
    best: Option<CliqueCover>,
}

impl Search<'_> {
    /// Triangles chosen so far count once each; every undecided vertex can at
    /// best share a triangle, every marked one at best an edge.
    fn lower_bound(&self) -> usize {
        let (u, m) = (self.undecided.count(), self.marked.count());
        self.chosen.len() + (2 * u + 3 * m).div_ceil(6)
    }

    fn run(&mut self) {
        if let Some(b) = &self.best {
            if self.lower_bound() >= b.size() {
                return;
            }
        }
        let Some(v) = self.undecided.first() else {
            let m = max_matching_within(self.g, &self.marked);
            let cover = CliqueCover::assemble(self.g.n(), &self.chosen, &m);
            if self.best.as_ref().is_none_or(|b| cover.size() < b.size()) {
                self.best = Some(cover);
            }
            return;
        };
        self.undecided.remove(v);
        let mut nbrs = self.g.neighbor_set(v);
        nbrs.intersect_with(self.undecided.as_words());
        let nbrs: Vec<usize> = nbrs.iter().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !self.g.has_edge(a, b) {
                    continue;
                }
                self.undecided.remove(a);
                self.undecided.remove(b);
                self.chosen.push(Triangle::new(v, a, b));
                self.run();
                self.chosen.pop();
                self.undecided.insert(a);
                self.undecided.insert(b);
            }
        }
        self.marked.insert(v);
        self.run();
        self.marked.remove(v);
        self.undecided.insert(v);
    }
}

/// Minimum clique cover by exhaustive branch and bound: the smallest
/// undecided vertex either joins a triangle of undecided vertices or is set
/// aside for the final maximum matching.
///
/// Independent of hitting sets and of T(G); requires a K4-free graph.
pub fn min_clique_cover_oracle(g: &Graph, limits: &OracleLimits) -> Result<CliqueCover, CoveringError> {
    if g.n() > limits.max_vertices {
        return Err(CoveringError::ScaleLimitExceeded {
            n: g.n(),
            limit: limits.max_vertices,
        });
    }
    if let Some(c) = find_induced(g, Pattern::K4) {
        return Err(CoveringError::PreconditionViolated(c));
    }
    let mut s = Search {
        g,
        undecided: BitSet::full(g.n()),
        marked: BitSet::new(g.n()),
        chosen: Vec::new(),
        best: None,
    };
    s.run();
    Ok(s.best.expect("the search reaches at least one leaf"))
}
