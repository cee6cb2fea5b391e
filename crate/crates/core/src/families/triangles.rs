//! Path and cycle of triangles graphs: a generator driven by set sizes, and
//! a clause-by-clause verifier for good partitions.
//!
//! Sets are numbered from 1 as in `X_1, X_2, ...`. A path has `2n + 1` sets;
//! a cycle has `2n` and reads indices modulo `2n`, so `X_2n+1 = X_1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FamilyError, DEFAULT_RETRIES};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::recognition::{is_prismatic, Coloring, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    Path,
    Cycle,
}

impl PartitionKind {
    pub fn name(self) -> &'static str {
        match self {
            PartitionKind::Path => "path",
            PartitionKind::Cycle => "cycle",
        }
    }
}

/// `X_1, .., X_nu` with the hats `X^_2i` and the `L/M/R` split of odd sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPartition {
    pub kind: PartitionKind,
    pub n: usize,
    /// `sets[k - 1]` is `X_k`.
    pub sets: Vec<VertexSet>,
    /// `hats[i - 1]` is `X^_2i`, for `1 <= i <= n`.
    pub hats: Vec<VertexSet>,
    /// `lmr[i - 1]` is `[L, M, R]` of `X_2i-1`; `n + 1` entries for a path,
    /// `n` for a cycle.
    pub lmr: Vec<[VertexSet; 3]>,
}

const L: usize = 0;
const M: usize = 1;
const R: usize = 2;

impl GoodPartition {
    /// Number of sets: `2n + 1` for a path, `2n` for a cycle.
    pub fn set_count(&self) -> usize {
        match self.kind {
            PartitionKind::Path => 2 * self.n + 1,
            PartitionKind::Cycle => 2 * self.n,
        }
    }

    /// Reduces a set number modulo `2n` on a cycle; on a path only `1..=2n+1`
    /// are valid.
    fn wrap(&self, k: usize) -> usize {
        match self.kind {
            PartitionKind::Path => k,
            PartitionKind::Cycle => (k + 2 * self.n - 1) % (2 * self.n) + 1,
        }
    }

    pub fn x(&self, k: usize) -> &VertexSet {
        &self.sets[self.wrap(k) - 1]
    }

    /// `X^_k` for even `k`.
    pub fn hat(&self, k: usize) -> &VertexSet {
        &self.hats[self.wrap(k) / 2 - 1]
    }

    fn part(&self, k: usize, which: usize) -> &VertexSet {
        &self.lmr[(self.wrap(k) - 1) / 2][which]
    }

    pub fn l(&self, k: usize) -> &VertexSet {
        self.part(k, L)
    }

    pub fn m(&self, k: usize) -> &VertexSet {
        self.part(k, M)
    }

    pub fn r(&self, k: usize) -> &VertexSet {
        self.part(k, R)
    }

    /// Set number of every vertex; `None` entries are unassigned.
    fn set_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (k, s) in self.sets.iter().enumerate() {
            for &v in s {
                if v < n {
                    out[v] = Some(k + 1);
                }
            }
        }
        out
    }

    /// `X_a` and `X_b` are neighbours in the sequence.
    fn consecutive(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        b == a + 1 || (self.kind == PartitionKind::Cycle && a == 1 && b == self.set_count())
    }

    /// `X_a`, `X_b` are odd and two apart.
    fn next_odd(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        a % 2 == 1
            && b % 2 == 1
            && (b == a + 2 || (self.kind == PartitionKind::Cycle && a == 1 && b == self.set_count() - 1))
    }

    /// In a non-hat part of an even set.
    fn is_rest(&self, v: usize, k: usize) -> bool {
        k.is_multiple_of(2) && !self.hat(k).contains(v)
    }
}

/// The conditions a good partition must meet, plus the remark that exactly
/// the non-hat vertices of even sets lie in no triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    Stable,
    P1,
    P2_1,
    P2_2,
    P4,
    P5_1,
    P5_2,
    P5_3,
    P5_4,
    P6_1,
    P6_2,
    P7_1,
    P7_2,
    P7_3,
    NoTriangle,
}

impl Clause {
    pub fn id(self) -> &'static str {
        match self {
            Clause::Stable => "stable",
            Clause::P1 => "P1",
            Clause::P2_1 => "P2.1",
            Clause::P2_2 => "P2.2",
            Clause::P4 => "P4",
            Clause::P5_1 => "P5.1",
            Clause::P5_2 => "P5.2",
            Clause::P5_3 => "P5.3",
            Clause::P5_4 => "P5.4",
            Clause::P6_1 => "P6.1",
            Clause::P6_2 => "P6.2",
            Clause::P7_1 => "P7.1",
            Clause::P7_2 => "P7.2",
            Clause::P7_3 => "P7.3",
            Clause::NoTriangle => "RT",
        }
    }
}

/// A violated clause. `index` is the `i` of the clause (a set number for
/// `Stable`, P2 and the triangle remark).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub index: usize,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at i={} witness {:?}", self.clause.id(), self.index, self.witness)
    }
}

fn violation(clause: Clause, index: usize, witness: Vec<usize>) -> Option<Violation> {
    Some(Violation {
        clause,
        index,
        witness,
    })
}

/// A vertex of `a` without exactly one neighbour in `b`, or of `b` in `a`.
fn unmatched(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<usize> {
    let count = |v: usize, other: &VertexSet| other.iter().filter(|&&w| g.has_edge(v, w)).count();
    a.iter()
        .copied()
        .find(|&v| count(v, b) != 1)
        .or_else(|| b.iter().copied().find(|&v| count(v, a) != 1))
}

fn shares_neighbor_in(g: &Graph, u: usize, v: usize, s: &VertexSet) -> bool {
    s.iter().any(|&h| g.has_edge(u, h) && g.has_edge(v, h))
}

fn union<'a>(sets: &[&'a VertexSet]) -> impl Iterator<Item = usize> + 'a {
    sets.to_vec().into_iter().flat_map(|s| s.iter().copied())
}

fn check_shape(g: &Graph, p: &GoodPartition) -> Result<(), FamilyError> {
    let bad = |m: &str| Err(FamilyError::MalformedPartition(String::from(m)));
    match p.kind {
        PartitionKind::Path if p.n < 1 => return bad("a path needs n >= 1"),
        PartitionKind::Cycle if p.n < 5 || p.n % 3 != 2 => {
            return bad("a cycle needs n >= 5 and n = 2 mod 3")
        }
        _ => {}
    }
    let odd = match p.kind {
        PartitionKind::Path => p.n + 1,
        PartitionKind::Cycle => p.n,
    };
    if p.sets.len() != p.set_count() || p.hats.len() != p.n || p.lmr.len() != odd {
        return bad("wrong number of sets");
    }
    let mut seen = vec![false; g.n()];
    for s in &p.sets {
        for &v in s {
            if v >= g.n() {
                return bad("vertex out of range");
            }
            if seen[v] {
                return bad("sets overlap");
            }
            seen[v] = true;
        }
    }
    if seen.contains(&false) {
        return bad("sets do not cover every vertex");
    }
    for i in 1..=p.n {
        if p.hat(2 * i).iter().any(|&v| !p.x(2 * i).contains(v)) {
            return bad("a hat is not inside its set");
        }
    }
    for i in 1..=odd {
        let k = 2 * i - 1;
        let parts: Vec<usize> = union(&[p.l(k), p.m(k), p.r(k)]).collect();
        let joined: VertexSet = parts.iter().copied().collect();
        if joined.len() != parts.len() || &joined != p.x(k) {
            return bad("L, M, R do not partition an odd set");
        }
    }
    Ok(())
}

/// Checks every condition on `p` against `g` and returns the first violation.
///
/// Conditions are checked in the order stable, P1, P2, P4, P5, P6, P7 and
/// the triangle remark. Errors only if `p` is not a partition of the right
/// shape.
pub fn verify_good_partition(g: &Graph, p: &GoodPartition) -> Result<Option<Violation>, FamilyError> {
    check_shape(g, p)?;
    Ok(first_violation(g, p))
}

fn first_violation(g: &Graph, p: &GoodPartition) -> Option<Violation> {
    let n = p.n;
    let nu = p.set_count();
    let path = p.kind == PartitionKind::Path;

    for k in 1..=nu {
        let s = p.x(k).as_slice();
        for (a, &u) in s.iter().enumerate() {
            if let Some(&v) = s[a + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                return violation(Clause::Stable, k, vec![u, v]);
            }
        }
    }

    for i in 1..=n {
        if p.hat(2 * i).is_empty() {
            return violation(Clause::P1, i, vec![]);
        }
        if (i < n || !path) && p.hat(2 * i).len() > 1 && p.hat(2 * i + 2).len() > 1 {
            return violation(Clause::P1, i, vec![]);
        }
    }

    let set_of = p.set_of(g.n());
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = (set_of[u].expect("partition"), set_of[v].expect("partition"));
            if a == b {
                continue;
            }
            let ((a, u), (b, v)) = if a < b { ((a, u), (b, v)) } else { ((b, v), (a, u)) };
            if let Some(c) = p2_breaks(g, p, (a, u), (b, v)) {
                return violation(c, a, vec![u, v]);
            }
        }
    }

    for i in 1..=n {
        let (e, lo, hi) = (2 * i, 2 * i - 1, 2 * i + 1);
        for u in p.x(e).iter().copied() {
            if let Some(v) = union(&[p.l(lo), p.r(hi)]).find(|&v| g.has_edge(u, v)) {
                return violation(Clause::P4, i, vec![u, v]);
            }
            if p.hat(e).contains(u) {
                continue;
            }
            if let Some(v) = union(&[p.m(lo), p.m(hi)]).find(|&v| g.has_edge(u, v)) {
                return violation(Clause::P4, i, vec![u, v]);
            }
            for &r in p.r(lo) {
                for &l in p.l(hi) {
                    if g.has_edge(r, l) && g.has_edge(u, r) == g.has_edge(u, l) {
                        return violation(Clause::P4, i, vec![u, r, l]);
                    }
                }
            }
        }
    }

    for clause in [Clause::P5_1, Clause::P5_2, Clause::P5_3, Clause::P5_4] {
        for i in (1..=n).filter(|&i| p.hat(2 * i).len() == 1) {
            if let Some(w) = p5_breaks(g, p, clause, i) {
                return violation(clause, i, w);
            }
        }
    }


    for i in 1..=n {
        let (e, lo, hi) = (2 * i, 2 * i - 1, 2 * i + 1);
        if p.hat(e).len() <= 1 {
            continue;
        }
        if let Some(v) = union(&[p.r(lo), p.l(hi)]).next() {
            return violation(Clause::P6_1, i, vec![v]);
        }
        for &u in p.x(lo) {
            for &v in p.x(hi) {
                if !g.has_edge(u, v) != shares_neighbor_in(g, u, v, p.hat(e)) {
                    return violation(Clause::P6_2, i, vec![u, v]);
                }
            }
        }
    }

    if path {
        for i in [1, n] {
            if p.hat(2 * i).len() != 1 {
                return violation(Clause::P7_1, i, vec![]);
            }
        }
        if let Some(v) = union(&[p.l(1), p.m(1), p.m(2 * n + 1), p.r(2 * n + 1)]).next() {
            return violation(Clause::P7_2, 0, vec![v]);
        }
        if p.r(1).is_empty() && !(n >= 2 && p.hat(4).len() > 1) {
            return violation(Clause::P7_3, 1, vec![]);
        }
        if p.l(2 * n + 1).is_empty() && !(n >= 2 && p.hat(2 * n - 2).len() > 1) {
            return violation(Clause::P7_3, n, vec![]);
        }
    }

    let tri = g.triangle_degrees();
    for (v, &t) in tri.iter().enumerate() {
        let k = set_of[v].expect("partition");
        if p.is_rest(v, k) == (t > 0) {
            return violation(Clause::NoTriangle, k, vec![v]);
        }
    }
    None
}

/// A witness against one part of P5 around the singleton hat `X^_2i`.
fn p5_breaks(g: &Graph, p: &GoodPartition, clause: Clause, i: usize) -> Option<Vec<usize>> {
    let (n, path) = (p.n, p.kind == PartitionKind::Path);
    let (e, lo, hi) = (2 * i, 2 * i - 1, 2 * i + 1);
    match clause {
        Clause::P5_1 => {
            if let Some(v) = unmatched(g, p.r(lo), p.l(hi)) {
                return Some(vec![v]);
            }
            for u in union(&[p.m(lo), p.r(lo)]) {
                for v in union(&[p.l(hi), p.m(hi)]) {
                    if g.has_edge(u, v) && !(p.r(lo).contains(u) && p.l(hi).contains(v)) {
                        return Some(vec![u, v]);
                    }
                }
            }
            None
        }
        Clause::P5_2 => {
            let x = p.hat(e).as_slice()[0];
            union(&[p.r(lo), p.m(lo), p.l(hi), p.m(hi)])
                .find(|&v| !g.has_edge(x, v))
                .map(|v| vec![x, v])
        }
        Clause::P5_3 => {
            for &u in p.l(lo) {
                if let Some(&v) = p.x(hi).iter().find(|&&v| !g.has_edge(u, v)) {
                    return Some(vec![u, v]);
                }
            }
            for &v in p.r(hi) {
                if let Some(&u) = p.x(lo).iter().find(|&&u| !g.has_edge(u, v)) {
                    return Some(vec![u, v]);
                }
            }
            None
        }
        _ => {
            if !path || i > 1 {
                if let Some(v) = unmatched(g, p.m(lo), p.hat(e - 2)) {
                    return Some(vec![v]);
                }
            }
            if !path || i < n {
                if let Some(v) = unmatched(g, p.m(hi), p.hat(e + 2)) {
                    return Some(vec![v]);
                }
            }
            None
        }
    }
}

/// The clause of P2 that the pair `u in X_a`, `v in X_b` (`a < b`) breaks.
fn p2_breaks(g: &Graph, p: &GoodPartition, (a, u): (usize, usize), (b, v): (usize, usize)) -> Option<Clause> {
    if (b - a) % 3 == 2 {
        let allowed = p.next_odd(a, b)
            || (a % 2 == 0 && b % 2 == 0 && !p.hat(a).contains(u) && !p.hat(b).contains(v));
        (!g.has_edge(u, v) && !allowed).then_some(Clause::P2_1)
    } else {
        (g.has_edge(u, v) && !p.consecutive(a, b)).then_some(Clause::P2_2)
    }
}

impl Violation {
    /// Re-checks the witness against `g` and `p` without searching: the
    /// named vertices alone must exhibit the violation.
    pub fn holds(&self, g: &Graph, p: &GoodPartition) -> bool {
        if check_shape(g, p).is_err() || self.witness.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let (n, i, w) = (p.n, self.index, self.witness.as_slice());
        let path = p.kind == PartitionKind::Path;
        let in_range = (1..=n).contains(&i);
        let (e, lo, hi) = (2 * i, (2 * i).wrapping_sub(1), 2 * i + 1);
        let adj = |a: usize, b: usize| g.has_edge(a, b);
        match (self.clause, w) {
            (Clause::Stable, &[u, v]) => {
                (1..=p.set_count()).contains(&i) && p.x(i).contains(u) && p.x(i).contains(v) && adj(u, v)
            }
            (Clause::P1, &[]) => {
                in_range
                    && (p.hat(e).is_empty()
                        || ((i < n || !path) && p.hat(e).len() > 1 && p.hat(e + 2).len() > 1))
            }
            (Clause::P2_1 | Clause::P2_2, &[u, v]) => {
                let sets = p.set_of(g.n());
                match (sets[u], sets[v]) {
                    (Some(a), Some(b)) if a == i && a < b => {
                        p2_breaks(g, p, (a, u), (b, v)) == Some(self.clause)
                    }
                    _ => false,
                }
            }
            (Clause::P4, &[u, v]) => {
                in_range
                    && p.x(e).contains(u)
                    && adj(u, v)
                    && (p.l(lo).contains(v)
                        || p.r(hi).contains(v)
                        || (!p.hat(e).contains(u) && (p.m(lo).contains(v) || p.m(hi).contains(v))))
            }
            (Clause::P4, &[u, r, l]) => {
                in_range
                    && p.x(e).contains(u)
                    && !p.hat(e).contains(u)
                    && p.r(lo).contains(r)
                    && p.l(hi).contains(l)
                    && adj(r, l)
                    && adj(u, r) == adj(u, l)
            }
            (Clause::P5_1, &[v]) => {
                let count = |s: &VertexSet| s.iter().filter(|&&x| adj(v, x)).count();
                in_range
                    && p.hat(e).len() == 1
                    && ((p.r(lo).contains(v) && count(p.l(hi)) != 1)
                        || (p.l(hi).contains(v) && count(p.r(lo)) != 1))
            }
            (Clause::P5_1, &[u, v]) => {
                in_range
                    && p.hat(e).len() == 1
                    && (p.m(lo).contains(u) || p.r(lo).contains(u))
                    && (p.l(hi).contains(v) || p.m(hi).contains(v))
                    && adj(u, v)
                    && !(p.r(lo).contains(u) && p.l(hi).contains(v))
            }
            (Clause::P5_2, &[x, v]) => {
                in_range
                    && p.hat(e).as_slice() == [x]
                    && [p.r(lo), p.m(lo), p.l(hi), p.m(hi)].iter().any(|s| s.contains(v))
                    && !adj(x, v)
            }
            (Clause::P5_3, &[u, v]) => {
                in_range
                    && p.hat(e).len() == 1
                    && !adj(u, v)
                    && ((p.l(lo).contains(u) && p.x(hi).contains(v))
                        || (p.x(lo).contains(u) && p.r(hi).contains(v)))
            }
            (Clause::P5_4, &[v]) => {
                if !in_range || p.hat(e).len() != 1 {
                    return false;
                }
                let count = |s: &VertexSet| s.iter().filter(|&&x| adj(v, x)).count();
                let left = !path || i > 1;
                let right = !path || i < n;
                (left && p.m(lo).contains(v) && count(p.hat(e - 2)) != 1)
                    || (left && p.hat(e - 2).contains(v) && count(p.m(lo)) != 1)
                    || (right && p.m(hi).contains(v) && count(p.hat(e + 2)) != 1)
                    || (right && p.hat(e + 2).contains(v) && count(p.m(hi)) != 1)
            }
            (Clause::P6_1, &[v]) => {
                in_range && p.hat(e).len() > 1 && (p.r(lo).contains(v) || p.l(hi).contains(v))
            }
            (Clause::P6_2, &[u, v]) => {
                in_range
                    && p.hat(e).len() > 1
                    && p.x(lo).contains(u)
                    && p.x(hi).contains(v)
                    && !adj(u, v) != shares_neighbor_in(g, u, v, p.hat(e))
            }
            (Clause::P7_1, &[]) => path && (i == 1 || i == n) && p.hat(2 * i).len() != 1,
            (Clause::P7_2, &[v]) => {
                path && [p.l(1), p.m(1), p.m(2 * n + 1), p.r(2 * n + 1)].iter().any(|s| s.contains(v))
            }
            (Clause::P7_3, &[]) => {
                path && ((i == 1 && p.r(1).is_empty() && !(n >= 2 && p.hat(4).len() > 1))
                    || (i == n && p.l(2 * n + 1).is_empty() && !(n >= 2 && p.hat(2 * n - 2).len() > 1)))
            }
            (Clause::NoTriangle, &[v]) => {
                (1..=p.set_count()).contains(&i)
                    && p.x(i).contains(v)
                    && p.is_rest(v, i) == (g.triangle_degrees()[v] > 0)
            }
            _ => false,
        }
    }
}

/// `A_k` is the union of the `X_i` with `i = k mod 3`; vertex colours are
/// `k`. Always proper for a path; on a cycle `X_2n` and `X_1` share a
/// colour, so an edge between them is reported as an error.
pub fn canonical_coloring(g: &Graph, p: &GoodPartition) -> Result<Coloring, FamilyError> {
    check_shape(g, p)?;
    let mut colors = vec![0u8; g.n()];
    for (k, s) in p.sets.iter().enumerate() {
        for &v in s {
            colors[v] = ((k + 1) % 3) as u8;
        }
    }
    let c = Coloring::from_colors(colors).expect("colours below 3");
    match c.conflict(g) {
        None => Ok(c),
        Some((u, v)) => Err(FamilyError::ImproperColoring { u, v }),
    }
}

/// Sizes and choices for a path or cycle of triangles, indexed by `i` in
/// `1..=n` at position `i - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrianglesSpec {
    pub n: usize,
    /// `|X^_2i|`.
    pub hats: Vec<usize>,
    /// `|X_2i \ X^_2i|`.
    pub rest: Vec<usize>,
    /// `|R_2i-1| = |L_2i+1|`; must be 0 when `|X^_2i| > 1`.
    pub pairs: Vec<usize>,
    /// Probability of each optional edge between non-hat vertices.
    pub rest_density: f64,
    pub seed: u64,
}

impl TrianglesSpec {
    /// `n` singleton hats, no non-hat vertices, no matched pairs except
    /// those at the ends that a path requires.
    pub fn singletons(n: usize) -> Self {
        let mut pairs = vec![0; n];
        pairs[0] = 1;
        pairs[n - 1] = 1;
        TrianglesSpec {
            n,
            hats: vec![1; n],
            rest: vec![0; n],
            pairs,
            rest_density: 0.0,
            seed: 0,
        }
    }

    /// A single triangle: `R_1`, the hat of `X_2` and `L_3`.
    pub fn minimal() -> Self {
        TrianglesSpec::singletons(1)
    }

    /// Six singleton hats with one matched pair at each end.
    pub fn ladder() -> Self {
        TrianglesSpec::singletons(6)
    }

    /// The ladder padded with non-hat vertices, spread over the even sets,
    /// up to `total` vertices; optional edges among them have probability
    /// one half.
    pub fn padded_ladder(total: usize, seed: u64) -> Self {
        let mut s = TrianglesSpec::ladder();
        let extra = total.saturating_sub(15);
        s.rest = (0..6).map(|i| extra / 6 + usize::from(i < extra % 6)).collect();
        s.rest_density = 0.5;
        s.seed = seed;
        s
    }

    /// The cycle with `n = 8`, singleton hats and `M` sets, `L = R = {}`.
    pub fn cycle8() -> Self {
        TrianglesSpec {
            n: 8,
            hats: vec![1; 8],
            rest: vec![0; 8],
            pairs: vec![0; 8],
            rest_density: 0.0,
            seed: 0,
        }
    }

    /// A random feasible spec: hats of size 1 to 3 (never two large ones in
    /// a row), set sizes up to `max_part`, random density.
    pub fn random(kind: PartitionKind, n: usize, max_part: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hats = vec![1; n];
        for i in 0..n {
            let ends = kind == PartitionKind::Path && (i == 0 || i + 1 == n);
            let prev_large = i > 0 && hats[i - 1] > 1;
            let wrap_large = kind == PartitionKind::Cycle && i + 1 == n && hats[0] > 1;
            if !ends && !prev_large && !wrap_large && rng.gen_bool(0.3) {
                hats[i] = rng.gen_range(2..=3);
            }
        }
        let mut pairs: Vec<usize> = (0..n)
            .map(|i| if hats[i] > 1 { 0 } else { rng.gen_range(0..=max_part) })
            .collect();
        if kind == PartitionKind::Path {
            if !(n >= 2 && hats[1] > 1) {
                pairs[0] = pairs[0].max(1);
            }
            if !(n >= 2 && hats[n - 2] > 1) {
                pairs[n - 1] = pairs[n - 1].max(1);
            }
        }
        let rest = (0..n).map(|_| rng.gen_range(0..=max_part)).collect();
        TrianglesSpec {
            n,
            hats,
            rest,
            pairs,
            rest_density: rng.gen_range(0.0..=1.0),
            seed: rng.gen(),
        }
    }

    fn check(&self, kind: PartitionKind) -> Result<(), FamilyError> {
        let n = self.n;
        let fail = |m: String| Err(FamilyError::SpecInfeasible(m));
        match kind {
            PartitionKind::Path if n < 1 => return fail("a path needs n >= 1".into()),
            PartitionKind::Cycle if n < 5 || n % 3 != 2 => {
                return fail("a cycle needs n >= 5 and n = 2 mod 3".into())
            }
            _ => {}
        }
        if self.hats.len() != n || self.rest.len() != n || self.pairs.len() != n {
            return fail(format!("hats, rest and pairs need {n} entries each"));
        }
        if !(0.0..=1.0).contains(&self.rest_density) {
            return fail("rest_density must lie in [0, 1]".into());
        }
        let h = &self.hats;
        for i in 0..n {
            if h[i] == 0 {
                return fail(format!("hat {} is empty (P1)", 2 * i + 2));
            }
            let next = if i + 1 < n {
                Some(i + 1)
            } else if kind == PartitionKind::Cycle {
                Some(0)
            } else {
                None
            };
            if let Some(j) = next {
                if h[i] > 1 && h[j] > 1 {
                    return fail(format!("hats {} and {} are both larger than 1 (P1)", 2 * i + 2, 2 * j + 2));
                }
            }
            if h[i] > 1 && self.pairs[i] > 0 {
                return fail(format!("pairs around hat {} must be 0 as it is not a singleton (P6.1)", 2 * i + 2));
            }
        }
        if kind == PartitionKind::Path {
            if h[0] != 1 || h[n - 1] != 1 {
                return fail("the first and last hats must be singletons (P7.1)".into());
            }
            if self.pairs[0] == 0 && !(n >= 2 && h[1] > 1) {
                return fail("R_1 empty needs n >= 2 and |X^_4| > 1 (P7.3)".into());
            }
            if self.pairs[n - 1] == 0 && !(n >= 2 && h[n - 2] > 1) {
                return fail("L_2n+1 empty needs n >= 2 and |X^_2n-2| > 1 (P7.3)".into());
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    L,
    M,
    R,
    Hat,
    Rest,
}

#[derive(Clone, Copy, Debug)]
struct Role {
    set: usize,
    part: Part,
    pos: usize,
}

struct Layout {
    n: usize,
    hats: Vec<usize>,
    roles: Vec<Role>,
    partition: GoodPartition,
}

impl Layout {
    fn new(spec: &TrianglesSpec, kind: PartitionKind) -> Layout {
        let n = spec.n;
        let nu = match kind {
            PartitionKind::Path => 2 * n + 1,
            PartitionKind::Cycle => 2 * n,
        };
        // Index helpers over i in 1..=n, wrapping on a cycle.
        let at = |v: &Vec<usize>, i: usize| -> Option<usize> {
            match kind {
                PartitionKind::Path => (1..=n).contains(&i).then(|| v[i - 1]),
                PartitionKind::Cycle => Some(v[(i + n - 1) % n]),
            }
        };
        let mut roles = Vec::new();
        let mut sets = Vec::new();
        let mut hats = Vec::new();
        let mut lmr = Vec::new();
        for k in 1..=nu {
            let mut set = Vec::new();
            let mut push = |part: Part, count: usize, roles: &mut Vec<Role>| {
                let first = roles.len();
                for pos in 0..count {
                    roles.push(Role { set: k, part, pos });
                }
                set.extend(first..first + count);
                (first..first + count).collect::<VertexSet>()
            };
            if k % 2 == 1 {
                let i = k.div_ceil(2);
                let l = at(&spec.pairs, i.wrapping_sub(1)).unwrap_or(0);
                let r = at(&spec.pairs, i).unwrap_or(0);
                let m = match (at(&spec.hats, i.wrapping_sub(1)), at(&spec.hats, i)) {
                    (Some(a), Some(b)) => a.max(b),
                    _ => 0,
                };
                let ls = push(Part::L, l, &mut roles);
                let ms = push(Part::M, m, &mut roles);
                let rs = push(Part::R, r, &mut roles);
                lmr.push([ls, ms, rs]);
            } else {
                let i = k / 2;
                hats.push(push(Part::Hat, spec.hats[i - 1], &mut roles));
                push(Part::Rest, spec.rest[i - 1], &mut roles);
            }
            sets.push(set.into_iter().collect());
        }
        Layout {
            n,
            hats: spec.hats.clone(),
            roles,
            partition: GoodPartition {
                kind,
                n,
                sets,
                hats,
                lmr,
            },
        }
    }

    fn h(&self, i: usize) -> usize {
        self.hats[(i + self.n - 1) % self.n]
    }

    fn labels(&self) -> Vec<String> {
        self.roles
            .iter()
            .map(|r| {
                let part = match r.part {
                    Part::L => "L",
                    Part::M => "M",
                    Part::R => "R",
                    Part::Hat => "hat",
                    Part::Rest => "rest",
                };
                format!("X_{}/{}", r.set, part)
            })
            .collect()
    }
}

/// The fixed adjacency between two roles; `None` where a random choice
/// decides (non-hat pairs, and a non-hat vertex against a matched end).
fn edge_between(lay: &Layout, u: Role, v: Role) -> Option<bool> {
    let p = &lay.partition;
    let (a, b) = (u.set, v.set);
    if a == b {
        return Some(false);
    }
    if p.consecutive(a, b) {
        let (odd, even) = if a % 2 == 1 { (u, v) } else { (v, u) };
        let h = lay.h(even.set / 2);
        // X_2i-1 sits left of the hat X_2i, X_2i+1 right of it.
        let left = p.wrap(odd.set + 1) == even.set;
        return match (even.part, odd.part, left) {
            (Part::Hat, Part::L, true) | (Part::Hat, Part::R, false) => Some(false),
            (Part::Hat, Part::R, true) | (Part::Hat, Part::L, false) => Some(true),
            (Part::Hat, Part::M, _) => Some(odd.pos % h == even.pos),
            (Part::Rest, Part::R, true) | (Part::Rest, Part::L, false) => None,
            (Part::Rest, _, _) => Some(false),
            _ => unreachable!("odd sets hold L, M, R; even sets hold hats and the rest"),
        };
    }
    if p.next_odd(a, b) {
        // Orient as X_2i-1 (lo) and X_2i+1 (hi) around the hat X_2i.
        let (lo, hi) = if p.wrap(a + 2) == b { (u, v) } else { (v, u) };
        let i = p.wrap(lo.set + 1) / 2;
        let h = lay.h(i);
        return Some(match (lo.part, hi.part) {
            (Part::L, _) | (_, Part::R) => true,
            (Part::R, Part::L) => lo.pos == hi.pos,
            (Part::M, Part::M) if h > 1 => lo.pos % h != hi.pos % h,
            _ => false,
        });
    }
    if (b - a) % 3 == 2 {
        if u.part == Part::Rest && v.part == Part::Rest {
            return None;
        }
        return Some(true);
    }
    Some(false)
}

fn build(spec: &TrianglesSpec, kind: PartitionKind) -> Result<(Graph, GoodPartition), FamilyError> {
    spec.check(kind)?;
    let lay = Layout::new(spec, kind);
    let nv = lay.roles.len();
    let p = &lay.partition;
    let labels = lay.labels();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut last = None;
    for _ in 0..DEFAULT_RETRIES {
        // Each non-hat vertex picks one end of every matched pair around its hat.
        let takes_r: Vec<Vec<bool>> = (0..nv)
            .map(|v| {
                let role = lay.roles[v];
                if role.part != Part::Rest {
                    return Vec::new();
                }
                let pairs = p.r(role.set - 1).len();
                (0..pairs).map(|_| rng.gen_bool(0.5)).collect()
            })
            .collect();
        let mut b = GraphBuilder::new(nv);
        for u in 0..nv {
            for v in u + 1..nv {
                let (ru, rv) = (lay.roles[u], lay.roles[v]);
                let edge = match edge_between(&lay, ru, rv) {
                    Some(e) => e,
                    None if ru.part == Part::Rest && rv.part == Part::Rest => rng.gen_bool(spec.rest_density),
                    None => {
                        // A non-hat vertex and a matched end next to it.
                        let (rest, end) = if ru.part == Part::Rest { (u, rv) } else { (v, ru) };
                        takes_r[rest][end.pos] == (end.part == Part::R)
                    }
                };
                if edge {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.labels(labels.clone()).expect("one label per vertex");
        let g = b.build();
        if let Some(v) = first_violation(&g, p) {
            last = Some(format!("{v}"));
            continue;
        }
        if let Verdict::No(c) = is_prismatic(&g) {
            last = Some(format!("{c}"));
            continue;
        }
        return Ok((g, p.clone()));
    }
    Err(FamilyError::RetriesExhausted {
        rounds: DEFAULT_RETRIES,
        last,
    })
}

/// A path of triangles graph with its good partition.
pub fn path_of_triangles(spec: &TrianglesSpec) -> Result<(Graph, GoodPartition), FamilyError> {
    build(spec, PartitionKind::Path)
}

/// A cycle of triangles graph with its good partition.
pub fn cycle_of_triangles(spec: &TrianglesSpec) -> Result<(Graph, GoodPartition), FamilyError> {
    build(spec, PartitionKind::Cycle)
}
