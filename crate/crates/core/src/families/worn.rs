//! Worn chains: ordered compositions of 3-coloured graphs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::FamilyError;
use crate::graph::{Graph, GraphBuilder};
use crate::recognition::Coloring;

/// A graph with a proper 3-colouring `(A, B, C)` = colours `(0, 1, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: Coloring,
}

impl ColoredGraph {
    pub fn new(graph: Graph, coloring: Coloring) -> Result<Self, FamilyError> {
        if coloring.n() != graph.n() {
            return Err(FamilyError::SpecInfeasible(format!(
                "colouring has {} vertices, graph has {}",
                coloring.n(),
                graph.n()
            )));
        }
        if let Some((u, v)) = coloring.conflict(&graph) {
            return Err(FamilyError::ImproperColoring { u, v });
        }
        Ok(ColoredGraph { graph, coloring })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn into_parts(self) -> (Graph, Coloring) {
        (self.graph, self.coloring)
    }
}

/// Cross pairs left out of a worn chain, in composed vertex numbers (term
/// `i` occupies the block after terms `0..i`). Every other pair allowed by
/// the colour rule is an edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WornLinks {
    pub missing: Vec<(usize, usize)>,
}

/// For `i < j`, `A_i` may only meet `B_j`, `B_i` only `C_j`, `C_i` only `A_j`.
fn permitted(earlier: u8, later: u8) -> bool {
    later == (earlier + 1) % 3
}

/// Composes the terms in order. Within a term nothing changes; between
/// terms `i < j`, every colour-permitted pair is an edge unless listed in
/// `links.missing`, and a pair may only be missing if neither end lies in a
/// triangle.
pub fn worn_chain_compose(terms: &[ColoredGraph], links: &WornLinks) -> Result<ColoredGraph, FamilyError> {
    if terms.is_empty() {
        return Err(FamilyError::SpecInfeasible("a worn chain needs at least one term".into()));
    }
    let mut offsets = Vec::with_capacity(terms.len());
    let mut term_of = Vec::new();
    let mut colors = Vec::new();
    let mut in_triangle = Vec::new();
    let mut labels = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        offsets.push(colors.len());
        let g = &t.graph;
        let tri = g.triangle_degrees();
        for v in 0..g.n() {
            term_of.push(i);
            colors.push(t.coloring.color(v));
            in_triangle.push(tri[v] > 0);
            labels.push(match g.label(v) {
                Some(l) => format!("G{}/{l}", i + 1),
                None => format!("G{}/{v}", i + 1),
            });
        }
    }
    let n = colors.len();
    let mut missing = Vec::with_capacity(links.missing.len());
    for &(a, b) in &links.missing {
        if a >= n || b >= n || term_of[a] == term_of[b] {
            return Err(FamilyError::InvalidLink { u: a, v: b });
        }
        let (u, v) = if term_of[a] < term_of[b] { (a, b) } else { (b, a) };
        if !permitted(colors[u], colors[v]) {
            return Err(FamilyError::InvalidLink { u: a, v: b });
        }
        if in_triangle[u] || in_triangle[v] {
            return Err(FamilyError::W3Violation { u, v });
        }
        missing.push((u, v));
    }
    missing.sort_unstable();
    let mut b = GraphBuilder::new(n);
    for (i, t) in terms.iter().enumerate() {
        for (u, v) in t.graph.edges() {
            b.add_edge(offsets[i] + u, offsets[i] + v).expect("in range");
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if term_of[u] < term_of[v] && permitted(colors[u], colors[v]) && missing.binary_search(&(u, v)).is_err() {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    b.labels(labels).map_err(|_| FamilyError::SpecInfeasible(String::from("labels")))?;
    let graph = b.build();
    let coloring = Coloring::from_colors(colors).expect("colours below 3");
    Ok(ColoredGraph { graph, coloring })
}
