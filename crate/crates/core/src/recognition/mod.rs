//! Certificate-producing checkers for prismatic graphs and their forbidden
//! configurations.
//!
//! Every negative answer carries a [`Certificate`] that [`Certificate::verify`]
//! re-checks against the host graph from first principles.

mod coloring;
mod orientation;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::covering::bounded_hitting_set;
use crate::embed::{find_induced_embedding, is_induced_embedding};
use crate::graph::{Graph, Triangle, VertexSet};

pub use coloring::{three_coloring, three_coloring_with_limit, Coloring, DEFAULT_COLORING_LIMIT};
pub use orientation::{is_orientable, triangle_pair_parity, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("ScaleLimitExceeded: {n} vertices exceeds the limit of {limit}")]
    ScaleLimitExceeded { n: usize, limit: usize },
    #[error("NotPrismatic: {0}")]
    NotPrismatic(Certificate),
    #[error("InvalidColoring: {0}")]
    InvalidColoring(&'static str),
}

/// Yes, possibly with a positive witness, or no with a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T = ()> {
    Yes(T),
    No(Certificate),
}

impl<T> Verdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Yes(_) => None,
            Verdict::No(c) => Some(c),
        }
    }

    pub fn yes(self) -> Option<T> {
        match self {
            Verdict::Yes(t) => Some(t),
            Verdict::No(_) => None,
        }
    }
}

/// Small fixed graphs searched for as induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// C4 plus two isolated vertices (the co-bridge).
    C4Plus2K1,
    Diamond,
    K4,
    C4,
    Claw,
    Prism,
    C4PlusK1,
    P3,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::C4Plus2K1,
        Pattern::Diamond,
        Pattern::K4,
        Pattern::C4,
        Pattern::Claw,
        Pattern::Prism,
        Pattern::C4PlusK1,
        Pattern::P3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::C4Plus2K1 => "C4_2K1",
            Pattern::Diamond => "DIAMOND",
            Pattern::K4 => "K4",
            Pattern::C4 => "C4",
            Pattern::Claw => "CLAW",
            Pattern::Prism => "PRISM",
            Pattern::C4PlusK1 => "C4_K1",
            Pattern::P3 => "P3",
        }
    }

    pub fn from_name(s: &str) -> Option<Pattern> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
    }

    /// The pattern on vertices `0..order()`; a certificate lists host
    /// vertices in this order.
    pub fn graph(self) -> Graph {
        const C4: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];
        let (n, edges): (usize, &[(usize, usize)]) = match self {
            Pattern::C4Plus2K1 => (6, &C4),
            Pattern::Diamond => (4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
            Pattern::K4 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            Pattern::C4 => (4, &C4),
            Pattern::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            Pattern::Prism => (
                6,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            ),
            Pattern::C4PlusK1 => (5, &C4),
            Pattern::P3 => (3, &[(0, 1), (1, 2)]),
        };
        Graph::from_edges(n, edges).expect("pattern edges are valid")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `[v, a, b, c]`: `{a, b, c}` is a triangle and `v` does not have
    /// exactly one neighbour in it.
    PrismaticViolation,
    /// The vertices induce the pattern, in pattern vertex order.
    ForbiddenSubgraph(Pattern),
    /// Consecutive triples are triangles `T_0, .., T_{k-1}`; cyclically
    /// consecutive ones are disjoint and their matching parities sum to odd.
    OddParityCycle,
    /// The vertices induce the pattern inside two colour classes.
    ColoringWitness { pattern: Pattern, classes: [u8; 2] },
    /// A hitting set with fewer than `k` vertices.
    SubstantialityWitness { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CertificateKind::PrismaticViolation => write!(f, "PrismaticViolation")?,
            CertificateKind::ForbiddenSubgraph(p) => write!(f, "ForbiddenSubgraph({p})")?,
            CertificateKind::OddParityCycle => write!(f, "OddParityCycle")?,
            CertificateKind::ColoringWitness { pattern, classes } => {
                write!(f, "ColoringWitness({pattern}, classes {}/{})", classes[0], classes[1])?
            }
            CertificateKind::SubstantialityWitness { k } => write!(f, "SubstantialityWitness(k={k})")?,
        }
        write!(f, " {:?}", self.vertices)
    }
}

impl Certificate {
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            CertificateKind::PrismaticViolation => "PrismaticViolation",
            CertificateKind::ForbiddenSubgraph(_) => "ForbiddenSubgraph",
            CertificateKind::OddParityCycle => "OddParityCycle",
            CertificateKind::ColoringWitness { .. } => "ColoringWitness",
            CertificateKind::SubstantialityWitness { .. } => "SubstantialityWitness",
        }
    }

    /// Re-checks the certificate against `g` without using any checker.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        match &self.kind {
            CertificateKind::PrismaticViolation => {
                let [v, a, b, c] = match vs[..] {
                    [v, a, b, c] => [v, a, b, c],
                    _ => return false,
                };
                let t = Triangle::new(a, b, c);
                g.is_triangle(&t)
                    && !t.contains(v)
                    && [a, b, c].iter().filter(|&&x| g.has_edge(v, x)).count() != 1
            }
            CertificateKind::ForbiddenSubgraph(p)
            | CertificateKind::ColoringWitness { pattern: p, .. } => {
                is_induced_embedding(&p.graph(), g, vs)
            }
            CertificateKind::OddParityCycle => {
                if !vs.len().is_multiple_of(3) || vs.len() < 9 {
                    return false;
                }
                let ts: Vec<Triangle> = vs.chunks(3).map(|c| Triangle::new(c[0], c[1], c[2])).collect();
                if ts.iter().any(|t| !g.is_triangle(t)) {
                    return false;
                }
                let mut parity = 0u8;
                for i in 0..ts.len() {
                    match triangle_pair_parity(g, &ts[i], &ts[(i + 1) % ts.len()]) {
                        Some(p) => parity ^= p,
                        None => return false,
                    }
                }
                parity == 1
            }
            CertificateKind::SubstantialityWitness { k } => {
                let s: VertexSet = vs.iter().copied().collect();
                s.len() < *k
                    && g
                        .triangles()
                        .iter()
                        .all(|t| t.vertices().iter().any(|&v| s.contains(v)))
            }
        }
    }

    /// [`Certificate::verify`] plus the colour-class condition of a
    /// [`CertificateKind::ColoringWitness`].
    pub fn verify_colored(&self, g: &Graph, c: &Coloring) -> bool {
        match &self.kind {
            CertificateKind::ColoringWitness { classes, .. } => {
                self.verify(g)
                    && c.n() == g.n()
                    && self.vertices.iter().all(|&v| classes.contains(&c.color(v)))
            }
            _ => self.verify(g),
        }
    }
}

/// Whether every vertex outside every triangle has exactly one neighbour in it.
pub fn is_prismatic(g: &Graph) -> Verdict {
    let n = g.n();
    for t in g.triangles() {
        let [a, b, c] = t.vertices();
        let (ra, rb, rc) = (g.row(a), g.row(b), g.row(c));
        for (w, ((&x, &y), &z)) in ra.iter().zip(rb).zip(rc).enumerate() {
            let exactly_one = (x ^ y ^ z) & !(x & y & z);
            let mut bad = !exactly_one;
            for v in [a, b, c] {
                if v >> 6 == w {
                    bad &= !(1u64 << (v & 63));
                }
            }
            if w == n >> 6 && n & 63 != 0 {
                bad &= (1u64 << (n & 63)) - 1;
            }
            if bad != 0 {
                let v = w * 64 + bad.trailing_zeros() as usize;
                return Verdict::No(Certificate {
                    kind: CertificateKind::PrismaticViolation,
                    vertices: alloc::vec![v, a, b, c],
                });
            }
        }
    }
    Verdict::Yes(())
}

/// An induced copy of `pattern` in `g`, if any.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Certificate> {
    let vertices = match pattern {
        Pattern::C4Plus2K1 => find_cobridge(g)?,
        _ => find_induced_embedding(&pattern.graph(), g)?,
    };
    Some(Certificate {
        kind: CertificateKind::ForbiddenSubgraph(pattern),
        vertices,
    })
}

/// Induced C4s are enumerated through their non-adjacent diagonal pairs,
/// each once; for each, two non-adjacent vertices anticomplete to it are
/// sought.
fn find_cobridge(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    for a in 0..n {
        for c in a + 1..n {
            if g.has_edge(a, c) {
                continue;
            }
            let mut common = g.neighbor_set(a);
            common.intersect_with(g.row(c));
            if common.count() < 2 {
                continue;
            }
            let mut outside_ac = BitSet::full(n);
            outside_ac.difference_with(g.row(a));
            outside_ac.difference_with(g.row(c));
            outside_ac.remove(a);
            outside_ac.remove(c);
            let mids: Vec<usize> = common.iter().filter(|&b| b > a).collect();
            for (i, &b) in mids.iter().enumerate() {
                for &d in &mids[i + 1..] {
                    if g.has_edge(b, d) {
                        continue;
                    }
                    let mut w = outside_ac.clone();
                    w.difference_with(g.row(b));
                    w.difference_with(g.row(d));
                    w.remove(b);
                    w.remove(d);
                    if w.count() < 2 {
                        continue;
                    }
                    for u in w.iter() {
                        let mut rest = w.clone();
                        rest.difference_with(g.row(u));
                        rest.remove(u);
                        if let Some(x) = rest.iter().find(|&x| x > u) {
                            return Some(alloc::vec![a, b, c, d, u, x]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// No induced C4 + 2K1.
pub fn is_cobridge_free(g: &Graph) -> Verdict {
    match find_induced(g, Pattern::C4Plus2K1) {
        Some(c) => Verdict::No(c),
        None => Verdict::Yes(()),
    }
}

/// `g` is k-substantial iff no set of fewer than `k` vertices meets every
/// triangle, i.e. iff Λ(g) ≥ k. On "no" the witness is a hitting set of
/// size at most `k - 1`.
pub fn is_k_substantial(g: &Graph, k: usize) -> Verdict {
    if k == 0 {
        return Verdict::Yes(());
    }
    match bounded_hitting_set(g, k - 1) {
        Some(h) => Verdict::No(Certificate {
            kind: CertificateKind::SubstantialityWitness { k },
            vertices: h.vertices.into_vec(),
        }),
        None => Verdict::Yes(()),
    }
}

/// An induced `pattern` using only colour classes `classes[0]` and `classes[1]`.
pub fn find_bicolored_pattern_in(
    g: &Graph,
    c: &Coloring,
    pattern: Pattern,
    classes: [u8; 2],
) -> Option<Certificate> {
    let keep: VertexSet = (0..g.n())
        .filter(|&v| classes.contains(&c.color(v)))
        .collect();
    let (sub, map) = g.induced_subgraph(&keep).expect("vertices in range");
    let found = find_induced(&sub, pattern)?;
    Some(Certificate {
        kind: CertificateKind::ColoringWitness { pattern, classes },
        vertices: found.vertices.iter().map(|&v| map[v]).collect(),
    })
}

/// An induced `pattern` inside some pair of colour classes, trying the
/// pairs (0,1), (0,2), (1,2) in that order.
pub fn find_bicolored_pattern(g: &Graph, c: &Coloring, pattern: Pattern) -> Option<Certificate> {
    [[0, 1], [0, 2], [1, 2]]
        .into_iter()
        .find_map(|classes| find_bicolored_pattern_in(g, c, pattern, classes))
}
