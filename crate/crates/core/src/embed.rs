//! Induced subgraph embedding by backtracking over bitset candidate sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Order pattern vertices so that each one has as many already-placed
/// neighbours as possible; this keeps the candidate sets small.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), usize::MAX - v)
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    allowed: Vec<BitSet>,
    map: Vec<usize>,
    used: BitSet,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let mut cand = self.allowed[p].clone();
        cand.difference_with(self.used.as_words());
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(self.host.row(hq));
            } else {
                cand.difference_with(self.host.row(hq));
            }
        }
        for h in cand.iter() {
            self.map[p] = h;
            self.used.insert(h);
            let stop = self.run(depth + 1, visit);
            self.used.remove(h);
            if stop {
                return true;
            }
        }
        false
    }
}

/// Calls `visit` with every injective map `pattern -> host` that preserves
/// both adjacency and non-adjacency, until `visit` returns `true`.
/// Returns whether the search was stopped by `visit`.
pub fn for_each_induced_embedding(
    pattern: &Graph,
    host: &Graph,
    visit: impl FnMut(&[usize]) -> bool,
) -> bool {
    search(pattern, host, None, visit)
}

/// First induced embedding that sends the first vertex of the search order
/// to `root`. On a vertex-transitive host this loses no generality.
pub fn find_rooted_induced_embedding(pattern: &Graph, host: &Graph, root: usize) -> Option<Vec<usize>> {
    let mut found = None;
    search(pattern, host, Some(root), |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

fn search(pattern: &Graph, host: &Graph, root: Option<usize>, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let (k, n) = (pattern.n(), host.n());
    if k > n {
        return false;
    }
    let host_deg: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let host_tri = host.triangle_degrees();
    let pat_tri = pattern.triangle_degrees();
    let allowed = (0..k)
        .map(|p| {
            let (d, t) = (pattern.degree(p), pat_tri[p]);
            let nd = k - 1 - d;
            let mut s = BitSet::new(n);
            for h in 0..n {
                // Adjacency is preserved, and so is non-adjacency.
                if host_deg[h] >= d && n - 1 - host_deg[h] >= nd && host_tri[h] >= t {
                    s.insert(h);
                }
            }
            s
        })
        .collect();
    let order = search_order(pattern);
    let mut allowed: Vec<BitSet> = allowed;
    if let (Some(r), Some(&first)) = (root, order.first()) {
        let keep = allowed[first].contains(r);
        allowed[first] = BitSet::new(n);
        if keep {
            allowed[first].insert(r);
        }
    }
    let mut search = Search {
        pattern,
        host,
        order,
        allowed,
        map: vec![usize::MAX; k],
        used: BitSet::new(n),
    };
    search.run(0, &mut visit)
}

/// First induced embedding found, as `map[pattern_vertex] = host_vertex`.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_embedding(pattern, host, |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

/// Isomorphism test by embedding between graphs of equal order.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && find_induced_embedding(a, b).is_some()
}

/// Checks that `map` is an injective adjacency- and non-adjacency-preserving map.
pub fn is_induced_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&h| h >= host.n()) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] || pattern.has_edge(i, j) != host.has_edge(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}
