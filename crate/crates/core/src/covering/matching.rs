//! Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{words_for, BitIter, BitSet};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Pairwise disjoint and every pair an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = BitSet::new(g.n());
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    alive: &'a BitSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
    scratch: Vec<u64>,
}

impl Blossom<'_> {
    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for (s, (r, a)) in self
                .scratch
                .iter_mut()
                .zip(self.g.row(v).iter().zip(self.alive.as_words()))
            {
                *s = r & a;
            }
            let nbrs: Vec<usize> = BitIter::over(&self.scratch).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_within(g, &BitSet::full(g.n()))
}

/// Maximum matching of the subgraph of `g` induced by `alive`.
///
/// Greedy initialisation in vertex order, then one augmenting-path search per
/// exposed vertex in increasing order, so the result depends only on `g`.
pub fn max_matching_within(g: &Graph, alive: &BitSet) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for u in alive.iter() {
        if mate[u] != NONE {
            continue;
        }
        if let Some(v) = g
            .neighbors(u)
            .find(|&v| v > u && mate[v] == NONE && alive.contains(v))
        {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut b = Blossom {
        g,
        alive,
        mate,
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
        scratch: vec![0; words_for(n)],
    };
    for root in alive.iter() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges = (0..n)
        .filter(|&u| b.mate[u] != NONE && u < b.mate[u])
        .map(|u| (u, b.mate[u]))
        .collect();
    Matching { edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_and_k4() {
        let c5 = Graph::cycle(5);
        let m = max_matching(&c5);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_in(&c5));
        assert_eq!(max_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn augments_through_a_blossom() {
        // Greedy takes (0,1) and (2,3), leaving 4 and 5 exposed; the only
        // augmenting path 4-3-2-1-0-5 runs around the 5-cycle.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 3);
    }

    #[test]
    fn respects_alive_mask() {
        let g = Graph::cycle(6);
        let mut alive = BitSet::full(6);
        alive.remove(0);
        let m = max_matching_within(&g, &alive);
        assert_eq!(m.len(), 2);
        assert!(m.edges().iter().all(|&(u, v)| u != 0 && v != 0));
    }
}
