//! Minimum clique covers through a small triangle hitting set.

use alloc::vec::Vec;

use super::hitting::{bounded_hitting_set_in, HittingSet};
use super::matching::max_matching_within;
use super::oracle::min_clique_cover_oracle;
use super::{CliqueCover, CoveringError, OracleLimits};
use crate::bitset::BitSet;
use crate::families::is_schlafli_prismatic;
use crate::graph::{Graph, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverConfig {
    /// Largest hitting set the main branch looks for.
    pub hitting_bound: usize,
    pub oracle: OracleLimits,
}

impl Default for CoverConfig {
    fn default() -> Self {
        CoverConfig {
            hitting_bound: 5,
            oracle: OracleLimits::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverBranch {
    HittingSet,
    SchlafliOracle,
}

impl CoverBranch {
    pub fn name(self) -> &'static str {
        match self {
            CoverBranch::HittingSet => "hitting-set",
            CoverBranch::SchlafliOracle => "schlafli-oracle",
        }
    }
}

/// How a cover was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub branch: CoverBranch,
    pub hitting_set: Option<HittingSet>,
    pub triangles: usize,
    /// Triangle packings tried.
    pub candidates: u64,
    /// Embedding into the Schlaefli complement, on the oracle branch.
    pub embedding: Option<Vec<usize>>,
}

/// The given pairwise disjoint triangles plus a maximum matching of the
/// remaining vertices, plus singletons.
pub fn cover_from_triangles(g: &Graph, triangles: &[Triangle]) -> Result<CliqueCover, CoveringError> {
    let mut alive = BitSet::full(g.n());
    for (i, t) in triangles.iter().enumerate() {
        if t.vertices().iter().any(|&v| v >= g.n()) || !g.is_triangle(t) {
            return Err(CoveringError::InvalidTriangle(*t));
        }
        if let Some(u) = triangles[..i].iter().find(|u| !u.is_disjoint(t)) {
            return Err(CoveringError::OverlappingTriangles(*u, *t));
        }
        t.vertices().iter().for_each(|&v| alive.remove(v));
    }
    let m = max_matching_within(g, &alive);
    Ok(CliqueCover::assemble(g.n(), triangles, &m))
}

struct Packings<'a> {
    g: &'a Graph,
    /// `groups[i]`: triangles through `s_i` avoiding every `s_j`, `j < i`.
    groups: Vec<Vec<Triangle>>,
    alive: BitSet,
    chosen: Vec<Triangle>,
    best: Option<(usize, CliqueCover)>,
    candidates: u64,
}

impl Packings<'_> {
    /// Every packing with at most one triangle from each group.
    fn walk(&mut self, i: usize) {
        if i == self.groups.len() {
            self.evaluate();
            return;
        }
        self.walk(i + 1);
        for k in 0..self.groups[i].len() {
            let t = self.groups[i][k];
            let vs = t.vertices();
            if !vs.iter().all(|&v| self.alive.contains(v)) {
                continue;
            }
            vs.iter().for_each(|&v| self.alive.remove(v));
            self.chosen.push(t);
            self.walk(i + 1);
            self.chosen.pop();
            vs.iter().for_each(|&v| self.alive.insert(v));
        }
    }

    fn evaluate(&mut self) {
        self.candidates += 1;
        let m = max_matching_within(self.g, &self.alive);
        let size = self.g.n() - 2 * self.chosen.len() - m.len();
        match &self.best {
            Some((b, _)) if size > *b => return,
            _ => {}
        }
        let cover = CliqueCover::assemble(self.g.n(), &self.chosen, &m);
        let better = match &self.best {
            None => true,
            Some((b, c)) => size < *b || cover.parts() < c.parts(),
        };
        if better {
            self.best = Some((size, cover));
        }
    }
}

/// Minimum clique cover of a diamond-free, K4-free graph.
///
/// If some set `S` of at most `config.hitting_bound` vertices meets every
/// triangle, every triangle packing takes at most one triangle through each
/// vertex of `S`, so trying all of them, each completed by a maximum
/// matching, is exact. Otherwise the graph must embed in the Schlaefli
/// complement, and the branch-and-bound oracle decides.
///
/// Among minimum covers the lexicographically smallest canonical part list
/// found is returned.
pub fn clique_cover(g: &Graph, config: &CoverConfig) -> Result<(CliqueCover, CoverReport), CoveringError> {
    let tm = g.t_matrix()?;
    let triangles = g.triangles();
    if let Some(h) = bounded_hitting_set_in(g.n(), &triangles, config.hitting_bound) {
        let s = h.vertices.as_slice();
        let groups = s
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                tm.triangles_through(v)
                    .into_iter()
                    .filter(|t| s[..i].iter().all(|&u| !t.contains(u)))
                    .collect()
            })
            .collect();
        let mut p = Packings {
            g,
            groups,
            alive: BitSet::full(g.n()),
            chosen: Vec::new(),
            best: None,
            candidates: 0,
        };
        p.walk(0);
        let (_, cover) = p.best.expect("the empty packing is always evaluated");
        let report = CoverReport {
            branch: CoverBranch::HittingSet,
            hitting_set: Some(h),
            triangles: triangles.len(),
            candidates: p.candidates,
            embedding: None,
        };
        return Ok((cover, report));
    }
    let Some(embedding) = is_schlafli_prismatic(g) else {
        return Err(CoveringError::NotCoverable {
            bound: config.hitting_bound,
        });
    };
    let cover = min_clique_cover_oracle(g, &config.oracle)?;
    let report = CoverReport {
        branch: CoverBranch::SchlafliOracle,
        hitting_set: None,
        triangles: triangles.len(),
        candidates: 0,
        embedding: Some(embedding),
    };
    Ok((cover, report))
}
