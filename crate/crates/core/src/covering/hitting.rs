//! Triangle hitting sets: bounded branching search and exact minimum oracles.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::covering::{CoveringError, OracleLimits};
use crate::graph::{Graph, Triangle, VertexSet};

/// A vertex set meeting every triangle of its host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub vertices: VertexSet,
    /// The budget the set was found under.
    pub k_bound: usize,
}

impl HittingSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn hits_all(&self, g: &Graph) -> bool {
        hits_all(&g.triangles(), &self.vertices)
    }
}

pub(crate) fn hits_all(triangles: &[Triangle], s: &VertexSet) -> bool {
    triangles
        .iter()
        .all(|t| t.vertices().iter().any(|&v| s.contains(v)))
}

struct Branching<'a> {
    triangles: &'a [Triangle],
    chosen: BitSet,
    excluded: BitSet,
    stack: Vec<usize>,
}

impl Branching<'_> {
    fn first_unhit(&self, from: usize) -> Option<usize> {
        (from..self.triangles.len()).find(|&i| {
            self.triangles[i]
                .vertices()
                .iter()
                .all(|&v| !self.chosen.contains(v))
        })
    }

    /// Branches on the vertices of the first triangle not yet hit. In the
    /// j-th branch the earlier vertices of that triangle are excluded, so no
    /// vertex set is explored twice.
    fn search(&mut self, from: usize, budget: usize) -> bool {
        let Some(i) = self.first_unhit(from) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let t = self.triangles[i].vertices();
        let mut newly_excluded = Vec::new();
        let mut found = false;
        for &v in &t {
            if self.excluded.contains(v) {
                continue;
            }
            self.chosen.insert(v);
            self.stack.push(v);
            if self.search(i + 1, budget - 1) {
                found = true;
                break;
            }
            self.stack.pop();
            self.chosen.remove(v);
            self.excluded.insert(v);
            newly_excluded.push(v);
        }
        for v in newly_excluded {
            self.excluded.remove(v);
        }
        found
    }
}

/// A hitting set of size at most `k`, or `None` if Λ(g) > k.
///
/// Depth-bounded branching over the vertices of an unhit triangle: at most
/// 3^k nodes, each scanning the triangle list once.
pub fn bounded_hitting_set(g: &Graph, k: usize) -> Option<HittingSet> {
    let triangles = g.triangles();
    bounded_hitting_set_in(g.n(), &triangles, k)
}

pub(crate) fn bounded_hitting_set_in(
    n: usize,
    triangles: &[Triangle],
    k: usize,
) -> Option<HittingSet> {
    let mut b = Branching {
        triangles,
        chosen: BitSet::new(n),
        excluded: BitSet::new(n),
        stack: Vec::new(),
    };
    b.search(0, k).then(|| HittingSet {
        vertices: b.stack.into_iter().collect(),
        k_bound: k,
    })
}

/// Minimum hitting set by iterative deepening over [`bounded_hitting_set`].
pub fn min_hitting_set_branching(g: &Graph) -> HittingSet {
    let triangles = g.triangles();
    (0..=g.n())
        .find_map(|k| bounded_hitting_set_in(g.n(), &triangles, k))
        .expect("the full vertex set hits every triangle")
}

/// Minimum hitting set by scanning vertex subsets in order of size, then
/// lexicographically. Exponential in `n`; intended for `n <= 15`.
pub fn min_hitting_set_subset_scan(g: &Graph) -> HittingSet {
    let n = g.n();
    let triangles = g.triangles();
    for size in 0..=n {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let s: VertexSet = comb.iter().copied().collect();
            if hits_all(&triangles, &s) {
                return HittingSet {
                    vertices: s,
                    k_bound: size,
                };
            }
            // Next combination in lexicographic order.
            let mut i = size;
            while i > 0 && comb[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set hits every triangle")
}

/// Minimum hitting set (so its size is Λ(g)).
///
/// Runs the branching search; when `n <= limits.subset_scan_vertices` the
/// subset scan runs too and the two sizes must agree.
pub fn min_hitting_set_oracle(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<HittingSet, CoveringError> {
    if g.n() > limits.max_vertices {
        return Err(CoveringError::ScaleLimitExceeded {
            n: g.n(),
            limit: limits.max_vertices,
        });
    }
    let best = min_hitting_set_branching(g);
    if g.n() <= limits.subset_scan_vertices {
        let scan = min_hitting_set_subset_scan(g);
        if scan.len() != best.len() {
            return Err(CoveringError::OracleMismatch {
                what: "hitting set",
                left: best.len(),
                right: scan.len(),
            });
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::cycle(6).complement()
    }

    #[test]
    fn triangle_free_needs_nothing() {
        let h = bounded_hitting_set(&Graph::cycle(5), 0).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn prism_needs_two() {
        let g = prism();
        assert!(bounded_hitting_set(&g, 1).is_none());
        let h = bounded_hitting_set(&g, 2).unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.hits_all(&g));
        assert_eq!(min_hitting_set_subset_scan(&g).len(), 2);
    }

    #[test]
    fn k4_needs_two() {
        let g = Graph::complete(4);
        assert_eq!(min_hitting_set_branching(&g).len(), 2);
        assert_eq!(min_hitting_set_subset_scan(&g).len(), 2);
    }

    #[test]
    fn oracle_respects_cap() {
        let limits = OracleLimits {
            max_vertices: 4,
            ..OracleLimits::default()
        };
        assert!(matches!(
            min_hitting_set_oracle(&Graph::empty(5), &limits),
            Err(CoveringError::ScaleLimitExceeded { n: 5, limit: 4 })
        ));
    }
}
