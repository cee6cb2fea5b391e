//! Triangle hitting sets, maximum matchings and minimum clique covers.

mod cover;
mod hitting;
mod matching;
mod oracle;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, GraphError, Triangle, VertexSet};
use crate::recognition::Certificate;

pub use cover::{clique_cover, cover_from_triangles, CoverBranch, CoverConfig, CoverReport};
pub use hitting::{
    bounded_hitting_set, min_hitting_set_branching, min_hitting_set_oracle,
    min_hitting_set_subset_scan, HittingSet,
};
pub use matching::{max_matching, max_matching_within, Matching};
pub use oracle::min_clique_cover_oracle;


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("ScaleLimitExceeded: {n} vertices exceeds the oracle limit of {limit}")]
    ScaleLimitExceeded { n: usize, limit: usize },
    #[error("OracleMismatch: {what}: {left} != {right}")]
    OracleMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },
    #[error("OverlappingTriangles: {0} and {1} share a vertex")]
    OverlappingTriangles(Triangle, Triangle),
    #[error("InvalidTriangle: {0} is not a triangle of the graph")]
    InvalidTriangle(Triangle),
    #[error("InvalidCover: {0}")]
    InvalidCover(&'static str),
    #[error("NotCoverable: no hitting set of size at most {bound} and not an induced subgraph of the Schlaefli complement")]
    NotCoverable { bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(Certificate),
}

/// Caps for the exponential oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest graph any oracle accepts.
    pub max_vertices: usize,
    /// Largest graph on which the subset-scan cross-check also runs.
    pub subset_scan_vertices: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 30,
            subset_scan_vertices: 15,
        }
    }
}

/// Part counts of a clique cover by size.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoverStats {
    pub triangles: usize,
    pub edges: usize,
    pub singletons: usize,
}

/// A partition of the vertex set into cliques, kept in canonical form:
/// each part sorted, parts in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    parts: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        let mut c = CliqueCover { parts };
        c.parts.sort();
        c
    }

    /// Triangles, then a matching, then singletons for everything left.
    pub(crate) fn assemble(n: usize, triangles: &[Triangle], matching: &Matching) -> Self {
        let mut covered = BitSet::new(n);
        let mut parts = Vec::with_capacity(n);
        for t in triangles {
            t.vertices().iter().for_each(|&v| covered.insert(v));
            parts.push(t.vertices().into_iter().collect());
        }
        for &(u, v) in matching.edges() {
            covered.insert(u);
            covered.insert(v);
            parts.push(VertexSet::from(alloc::vec![u, v]));
        }
        for v in 0..n {
            if !covered.contains(v) {
                parts.push(VertexSet::from(alloc::vec![v]));
            }
        }
        CliqueCover::new(parts)
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn stats(&self) -> CoverStats {
        let mut s = CoverStats::default();
        for p in &self.parts {
            match p.len() {
                3 => s.triangles += 1,
                2 => s.edges += 1,
                _ => s.singletons += 1,
            }
        }
        s
    }

    /// Every part a nonempty clique, parts pairwise disjoint, union `V(g)`.
    pub fn validate(&self, g: &Graph) -> Result<(), CoveringError> {
        let mut seen = BitSet::new(g.n());
        for p in &self.parts {
            if p.is_empty() {
                return Err(CoveringError::InvalidCover("empty part"));
            }
            if p.iter().any(|&v| v >= g.n()) {
                return Err(CoveringError::InvalidCover("vertex out of range"));
            }
            if !g.is_clique(p.as_slice()) {
                return Err(CoveringError::InvalidCover("part is not a clique"));
            }
            for &v in p {
                if seen.contains(v) {
                    return Err(CoveringError::InvalidCover("parts overlap"));
                }
                seen.insert(v);
            }
        }
        if seen.count() != g.n() {
            return Err(CoveringError::InvalidCover("parts do not cover every vertex"));
        }
        Ok(())
    }
}

impl fmt::Display for CliqueCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, v) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}
