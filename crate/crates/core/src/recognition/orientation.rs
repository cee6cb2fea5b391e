//! Orientations: one cyclic order per triangle, consistent across every pair
//! of disjoint triangles under the matching between them.
//!
//! Fix the reference order `a -> b -> c` of each sorted triangle and a bit
//! per triangle (0 = reference order, 1 = reversed). Each disjoint pair then
//! imposes `bit(S) xor bit(T) = parity`, so orientability is a parity
//! union-find problem, and an inconsistency is an odd cycle of triangles.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Certificate, CertificateKind, RecognitionError, Verdict};
use crate::graph::{Graph, Triangle};

/// Parity of the matching between disjoint triangles `s` and `t`: 0 when it
/// carries the reference order of `s` to a rotation of the reference order
/// of `t`, 1 when to a reversal. `None` if the triangles are not disjoint or
/// not perfectly matched.
pub fn triangle_pair_parity(g: &Graph, s: &Triangle, t: &Triangle) -> Option<u8> {
    let m = g.disjoint_triangle_matching(s, t).ok()?;
    let tv = t.vertices();
    let pos = |x: usize| tv.iter().position(|&y| y == x).expect("matched into t");
    let p = [pos(m[0].1), pos(m[1].1), pos(m[2].1)];
    let inversions = (p[0] > p[1]) as u8 + (p[0] > p[2]) as u8 + (p[1] > p[2]) as u8;
    Some(inversions & 1)
}

/// A cyclic order for every triangle of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    triangles: Vec<Triangle>,
    /// `cyclic[i]` lists `triangles[i]` in its chosen order, smallest first.
    cyclic: Vec<[usize; 3]>,
}

impl Orientation {
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn order_of(&self, t: &Triangle) -> Option<[usize; 3]> {
        self.triangles
            .binary_search(t)
            .ok()
            .map(|i| self.cyclic[i])
    }

    /// Checks the orientation against `g` pair by pair, straight from the
    /// definition: `S` is ordered `s1 -> s2 -> s3` iff `T` is ordered
    /// `t1 -> t2 -> t3`, where `si` is matched to `ti`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.triangles != g.triangles() {
            return false;
        }
        let follows = |c: &[usize; 3], x: [usize; 3]| {
            (0..3).any(|r| c[r] == x[0] && c[(r + 1) % 3] == x[1] && c[(r + 2) % 3] == x[2])
        };
        for (i, s) in self.triangles.iter().enumerate() {
            if !follows(&self.cyclic[i], s.vertices())
                && !follows(&self.cyclic[i], {
                    let [a, b, c] = s.vertices();
                    [a, c, b]
                })
            {
                return false;
            }
            for (j, t) in self.triangles.iter().enumerate().skip(i + 1) {
                if !s.is_disjoint(t) {
                    continue;
                }
                let Ok(m) = g.disjoint_triangle_matching(s, t) else {
                    return false;
                };
                let sx = [m[0].0, m[1].0, m[2].0];
                let tx = [m[0].1, m[1].1, m[2].1];
                if follows(&self.cyclic[i], sx) != follows(&self.cyclic[j], tx) {
                    return false;
                }
            }
        }
        true
    }
}

struct ParityDsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
    /// Parity of each node relative to its parent.
    up: Vec<u8>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            rank: vec![0; n],
            up: vec![0; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push(r);
            r = self.parent[r];
        }
        // Compress from the top so each parity is taken relative to the root.
        for &y in path.iter().rev() {
            let p = self.parent[y];
            if p != r {
                self.up[y] ^= self.up[p];
            }
            self.parent[y] = r;
        }
        (r, if x == r { 0 } else { self.up[x] })
    }

    /// Imposes `bit(a) xor bit(b) = p`. Returns `Ok(true)` if the two were
    /// joined, `Ok(false)` if already consistent, `Err(())` on conflict.
    fn union(&mut self, a: usize, b: usize, p: u8) -> Result<bool, ()> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return if pa ^ pb == p { Ok(false) } else { Err(()) };
        }
        let (lo, hi) = if self.rank[ra] < self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi;
        self.up[lo] = pa ^ pb ^ p;
        if self.rank[lo] == self.rank[hi] {
            self.rank[hi] += 1;
        }
        Ok(true)
    }
}

fn prismatic_violation(g: &Graph, s: &Triangle, t: &Triangle) -> Certificate {
    let sv = s.vertices();
    let v = t
        .vertices()
        .into_iter()
        .find(|&v| sv.iter().filter(|&&x| g.has_edge(v, x)).count() != 1)
        .or_else(|| {
            sv.into_iter().find(|&v| {
                t.vertices().iter().filter(|&&x| g.has_edge(v, x)).count() != 1
            })
        })
        .expect("an imperfect matching leaves some vertex without exactly one neighbour");
    let host = if t.contains(v) { sv } else { t.vertices() };
    Certificate {
        kind: CertificateKind::PrismaticViolation,
        vertices: vec![v, host[0], host[1], host[2]],
    }
}

/// Finds an orientation, or an odd cycle of triangles proving there is none.
///
/// Errors with a prismatic-violation certificate if two disjoint triangles
/// are not perfectly matched.
pub fn is_orientable(g: &Graph) -> Result<Verdict<Orientation>, RecognitionError> {
    let triangles = g.triangles();
    let k = triangles.len();
    let mut dsu = ParityDsu::new(k);
    let mut forest: Vec<Vec<(usize, u8)>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if !triangles[i].is_disjoint(&triangles[j]) {
                continue;
            }
            let Some(p) = triangle_pair_parity(g, &triangles[i], &triangles[j]) else {
                return Err(RecognitionError::NotPrismatic(prismatic_violation(
                    g,
                    &triangles[i],
                    &triangles[j],
                )));
            };
            match dsu.union(i, j, p) {
                Ok(true) => {
                    forest[i].push((j, p));
                    forest[j].push((i, p));
                }
                Ok(false) => {}
                Err(()) => {
                    let path = forest_path(&forest, i, j);
                    let vertices = path
                        .iter()
                        .flat_map(|&x| triangles[x].vertices())
                        .collect();
                    return Ok(Verdict::No(Certificate {
                        kind: CertificateKind::OddParityCycle,
                        vertices,
                    }));
                }
            }
        }
    }
    let cyclic = triangles
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let [a, b, c] = t.vertices();
            if dsu.find(i).1 == 0 {
                [a, b, c]
            } else {
                [a, c, b]
            }
        })
        .collect();
    Ok(Verdict::Yes(Orientation { triangles, cyclic }))
}

/// Nodes on the forest path from `from` to `to`, inclusive.
fn forest_path(forest: &[Vec<(usize, u8)>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; forest.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, _) in &forest[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}
