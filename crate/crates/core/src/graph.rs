//! Dense simple graphs, triangles, the T(G) annotation matrix and graph surgery.
//!
//! A [`Graph`] is immutable once built. Adjacency is a symmetric bit matrix so
//! that adjacency tests and neighbourhood intersections are word operations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::bitset::{words_for, BitIter, BitSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("InvalidEdge: ({u}, {v}) is not a valid edge of a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("InvalidVertex: {v} is out of range for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },
    #[error("InvalidLabels: {got} labels supplied for {n} vertices")]
    InvalidLabels { got: usize, n: usize },
    /// Two distinct common neighbours of an adjacent pair: the four vertices
    /// induce a diamond or a K4.
    #[error("NotDiamondK4Free: {witness:?} induces a diamond or K4")]
    NotDiamondK4Free { witness: [usize; 4] },
    #[error("NotPrismaticWitness: adjacency between {t1} and {t2} is not a perfect matching")]
    NotPrismaticWitness { t1: Triangle, t2: Triangle },
}

/// Three pairwise adjacent vertices, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn is_disjoint(&self, other: &Triangle) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = core::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Mutable edge accumulator; [`GraphBuilder::build`] freezes it into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            words: g.words,
            adj: g.adj.clone(),
            labels: g.labels.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.set_edge(u, v, true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.set_edge(u, v, false)
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n || u == v {
            return Err(GraphError::InvalidEdge { u, v, n: self.n });
        }
        let (iu, bu) = (u * self.words + (v >> 6), 1u64 << (v & 63));
        let (iv, bv) = (v * self.words + (u >> 6), 1u64 << (u & 63));
        if present {
            self.adj[iu] |= bu;
            self.adj[iv] |= bv;
        } else {
            self.adj[iu] &= !bu;
            self.adj[iv] &= !bv;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub fn labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::InvalidLabels {
                got: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            adj: self.adj,
            labels: self.labels,
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    /// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.add_edge(v, (v + 1) % n).expect("in range");
        }
        b.build()
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(&self);
        b.labels(labels)?;
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    /// Neighbourhood of `v` as raw bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbor_set(&self, v: usize) -> BitSet {
        BitSet::from_words(self.n, self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::over(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_triangle(&self, t: &Triangle) -> bool {
        let [a, b, c] = t.vertices();
        a != b && b != c && self.is_clique(&t.vertices())
    }

    /// Every triangle exactly once, in lexicographic order of sorted triples.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        let mut common = vec![0u64; self.words];
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                for (c, (x, y)) in common.iter_mut().zip(self.row(a).iter().zip(self.row(b))) {
                    *c = x & y;
                }
                for c in BitIter::over(&common).filter(|&c| c > b) {
                    out.push(Triangle([a, b, c]));
                }
            }
        }
        out
    }

    /// Number of triangles through each vertex.
    pub fn triangle_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for t in self.triangles() {
            for v in t.vertices() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Computes T(G). Requires a diamond-free, K4-free graph.
    pub fn t_matrix(&self) -> Result<TMatrix, GraphError> {
        let n = self.n;
        let mut entries = vec![TEntry::NotAdjacent; n * n];
        let mut common = vec![0u64; self.words];
        for v in 0..n {
            for w in self.neighbors(v).filter(|&w| w > v) {
                for (c, (x, y)) in common.iter_mut().zip(self.row(v).iter().zip(self.row(w))) {
                    *c = x & y;
                }
                let mut it = BitIter::over(&common);
                let entry = match (it.next(), it.next()) {
                    (None, _) => TEntry::NoCommonNeighbor,
                    (Some(x), None) => TEntry::CommonNeighbor(x),
                    (Some(x), Some(y)) => {
                        return Err(GraphError::NotDiamondK4Free {
                            witness: [v, w, x, y],
                        })
                    }
                };
                entries[v * n + w] = entry;
                entries[w * n + v] = entry;
            }
        }
        Ok(TMatrix { n, entries })
    }

    /// Induced subgraph on `s`, reindexed in increasing order. The second
    /// component maps new indices back to vertices of `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        let map: Vec<usize> = s.iter().copied().collect();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j).expect("in range");
                }
            }
        }
        if let Some(labels) = &self.labels {
            b.labels(map.iter().map(|&v| labels[v].clone()).collect())
                .expect("one label per vertex");
        }
        Ok((b.build(), map))
    }

    /// The graph with `v` deleted.
    pub fn without_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        self.induced_subgraph(&(0..self.n).filter(|&u| u != v).collect())
    }

    /// The graph with the adjacency of `u, v` flipped.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        b.set_edge(u, v, !self.has_edge(u, v))?;
        Ok(b.build())
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.labels = self.labels.clone();
        b.build()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            b.add_edge(u + self.n, v + self.n).expect("in range");
        }
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels = Vec::with_capacity(n);
            for g in [self, other] {
                for v in 0..g.n {
                    labels.push(g.label(v).map(String::from).unwrap_or_default());
                }
            }
            b.labels = Some(labels);
        }
        b.build()
    }

    /// The perfect matching between two vertex-disjoint triangles that every
    /// prismatic graph induces. Pairs are `(s, t)` with `s` from `t1`, in the
    /// order of `t1`'s vertices.
    pub fn disjoint_triangle_matching(
        &self,
        t1: &Triangle,
        t2: &Triangle,
    ) -> Result<[(usize, usize); 3], GraphError> {
        let err = || GraphError::NotPrismaticWitness { t1: *t1, t2: *t2 };
        if !t1.is_disjoint(t2) || !self.is_triangle(t1) || !self.is_triangle(t2) {
            return Err(err());
        }
        let mut out = [(0, 0); 3];
        let mut used = [false; 3];
        for (k, &s) in t1.vertices().iter().enumerate() {
            let mut nb = t2.vertices().into_iter().enumerate().filter(|&(_, t)| self.has_edge(s, t));
            match (nb.next(), nb.next()) {
                (Some((j, t)), None) if !used[j] => {
                    used[j] = true;
                    out[k] = (s, t);
                }
                _ => return Err(err()),
            }
        }
        Ok(out)
    }
}

/// One entry of T(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TEntry {
    NotAdjacent,
    NoCommonNeighbor,
    CommonNeighbor(usize),
}

/// T(G): for every pair, non-adjacency, adjacency without a common
/// neighbour, or adjacency with the (unique) common neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    n: usize,
    entries: Vec<TEntry>,
}

impl TMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, v: usize, w: usize) -> TEntry {
        self.entries[v * self.n + w]
    }

    /// Triangles containing `v`, read off row `v` in O(n).
    pub fn triangles_through(&self, v: usize) -> Vec<Triangle> {
        let row = &self.entries[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(w, e)| match *e {
                TEntry::CommonNeighbor(x) if w < x => Some(Triangle::new(v, w, x)),
                _ => None,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn brute_triangles(g: &Graph) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                for c in b + 1..g.n() {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        out.push(Triangle::new(a, b, c));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::InvalidEdge { u: 0, v: 3, n: 3 })
        );
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::InvalidEdge { .. })
        ));
    }

    #[test]
    fn build_k3_and_edgeless() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2), (1, 0)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(k3.edge_count(), 3);
        let e = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.n(), 4);
    }

    #[test]
    fn prism_has_two_disjoint_triangles() {
        let g = prism();
        let ts = g.triangles();
        assert_eq!(ts, brute_triangles(&g));
        assert_eq!(ts, vec![Triangle::new(0, 1, 2), Triangle::new(3, 4, 5)]);
        assert!(ts[0].is_disjoint(&ts[1]));
    }

    #[test]
    fn c5_is_triangle_free() {
        assert!(Graph::cycle(5).triangles().is_empty());
    }

    #[test]
    fn t_matrix_small_cases() {
        let k3 = Graph::complete(3);
        let t = k3.t_matrix().unwrap();
        assert_eq!(t.get(0, 1), TEntry::CommonNeighbor(2));
        assert_eq!(t.get(2, 1), TEntry::CommonNeighbor(0));
        assert_eq!(t.get(0, 0), TEntry::NotAdjacent);

        let c4 = Graph::cycle(4).t_matrix().unwrap();
        assert_eq!(c4.get(0, 1), TEntry::NoCommonNeighbor);
        assert_eq!(c4.get(0, 2), TEntry::NotAdjacent);

        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        match diamond.t_matrix() {
            Err(GraphError::NotDiamondK4Free { witness }) => {
                assert_eq!(&witness[..2], &[1, 2]);
            }
            other => panic!("expected diamond witness, got {other:?}"),
        }
    }

    #[test]
    fn t_matrix_rows_give_triangles() {
        let g = prism();
        let t = g.t_matrix().unwrap();
        assert_eq!(t.triangles_through(4), vec![Triangle::new(3, 4, 5)]);
        assert!(t.triangles_through(0).contains(&Triangle::new(0, 1, 2)));
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = prism();
        let (k3, map) = g.induced_subgraph(&VertexSet::from(vec![3, 4, 5])).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![3, 4, 5]);
        let (e, _) = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(
            g.induced_subgraph(&VertexSet::from(vec![1, 9])).unwrap_err(),
            GraphError::InvalidVertex { v: 9, n: 6 }
        );
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
    }

    #[test]
    fn prism_matching_is_the_rungs() {
        let g = prism();
        let m = g
            .disjoint_triangle_matching(&Triangle::new(0, 1, 2), &Triangle::new(3, 4, 5))
            .unwrap();
        assert_eq!(m, [(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn overlapping_triangles_are_rejected() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(matches!(
            g.disjoint_triangle_matching(&Triangle::new(0, 1, 2), &Triangle::new(2, 3, 4)),
            Err(GraphError::NotPrismaticWitness { .. })
        ));
    }
}
