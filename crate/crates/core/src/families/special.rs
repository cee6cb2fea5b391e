//! Fixed small graphs and the ring-of-five and mantled L(K3,3) families.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FamilyError, DEFAULT_RETRIES};
use crate::graph::{Graph, GraphBuilder};
use crate::recognition::{is_prismatic, Coloring, Verdict};

/// Index of `a^i_j` (1-based `i`, `j`) in [`line_k33`].
pub fn lk33_index(i: usize, j: usize) -> usize {
    (i - 1) * 3 + (j - 1)
}

fn lk33_edges(b: &mut GraphBuilder, offset: usize) {
    for u in 0..9 {
        for v in u + 1..9 {
            if u / 3 != v / 3 && u % 3 != v % 3 {
                b.add_edge(offset + u, offset + v).expect("in range");
            }
        }
    }
}

fn grid_labels(prefix: &str) -> impl Iterator<Item = String> + '_ {
    (1..=3).flat_map(move |i| (1..=3).map(move |j| format!("{prefix}^{i}_{j}")))
}

/// L(K3,3): `a^i_j ~ a^i'_j'` iff `i != i'` and `j != j'`.
pub fn line_k33() -> Graph {
    let mut b = GraphBuilder::new(9);
    lk33_edges(&mut b, 0);
    b.labels(grid_labels("a").collect()).expect("9 labels");
    b.build()
}

/// L(K3,3) coloured by rows: `a^i_j` gets colour `i - 1`.
pub fn line_k33_row_coloring() -> Coloring {
    Coloring::from_colors((0..9).map(|v| (v / 3) as u8).collect()).expect("colours below 3")
}

/// L(K3,3) coloured by columns: `a^i_j` gets colour `j - 1`.
pub fn line_k33_column_coloring() -> Coloring {
    Coloring::from_colors((0..9).map(|v| (v % 3) as u8).collect()).expect("colours below 3")
}

/// The complement of the Schlaefli graph on `r^i_j` (0..9), `s^i_j` (9..18)
/// and `t^i_j` (18..27). Each block is an L(K3,3), and `x^i_j` is adjacent
/// to `y^i'_j'` for the next block `y` (r, s, t cyclically) iff `j = i'`.
pub fn schlafli_complement() -> Graph {
    let mut b = GraphBuilder::new(27);
    for block in 0..3 {
        lk33_edges(&mut b, 9 * block);
        let next = 9 * ((block + 1) % 3);
        for u in 0..9 {
            for v in 0..9 {
                // u = (i, j), v = (i', j'): adjacent iff j = i'.
                if u % 3 == v / 3 {
                    b.add_edge(9 * block + u, next + v).expect("in range");
                }
            }
        }
    }
    let labels = ["r", "s", "t"].iter().flat_map(|p| grid_labels(p)).collect();
    b.labels(labels).expect("27 labels");
    b.build()
}

/// The complement of C6: triangles `{0, 2, 4}` and `{1, 3, 5}`.
pub fn prism() -> Graph {
    Graph::cycle(6).complement()
}

/// `a_i` is vertex `i - 1`, `b_i` is vertex `4 + i`.
fn ring_a(i: usize) -> usize {
    (i + 4) % 5
}

fn ring_b(i: usize) -> usize {
    5 + (i + 4) % 5
}

fn core_ring_edges(b: &mut GraphBuilder) {
    for i in 1..=5 {
        let (x, y, z) = (ring_a(i), ring_a(i + 1), ring_b(i + 3));
        b.add_edge(x, y).expect("in range");
        b.add_edge(x, z).expect("in range");
        b.add_edge(y, z).expect("in range");
        b.add_edge(ring_a(i), ring_b(i)).expect("in range");
    }
}

fn core_ring_labels() -> Vec<String> {
    (1..=5)
        .map(|i| format!("a_{i}"))
        .chain((1..=5).map(|i| format!("b_{i}")))
        .collect()
}

/// The core ring of five on `a_1..a_5, b_1..b_5`: triangles
/// `{a_i, a_i+1, b_i+3}` and edges `a_i b_i`, indices mod 5.
pub fn core_ring_of_five() -> Graph {
    let mut b = GraphBuilder::new(10);
    core_ring_edges(&mut b);
    b.labels(core_ring_labels()).expect("10 labels");
    b.build()
}

/// Parameters of a ring of five: `sizes[k] = |V_k|` and the probability of
/// each `V_i`-`V_i+1` edge.
#[derive(Clone, Debug, PartialEq)]
pub struct RingOfFiveSpec {
    pub sizes: [usize; 6],
    pub density: f64,
    pub seed: u64,
}

/// A ring of five. `V_i`-`V_i+1` edges are drawn independently with
/// probability `density`; draws that are not prismatic are redrawn.
pub fn ring_of_five(spec: &RingOfFiveSpec) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(FamilyError::SpecInfeasible("density must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut start = [0usize; 6];
    let mut n = 10;
    for k in 0..6 {
        start[k] = n;
        n += spec.sizes[k];
    }
    let members = |k: usize| start[k]..start[k] + spec.sizes[k];
    let mut labels = core_ring_labels();
    for k in 0..6 {
        labels.extend(members(k).map(|_| format!("V_{k}")));
    }
    let mut last = None;
    for _ in 0..DEFAULT_RETRIES {
        let mut b = GraphBuilder::new(n);
        core_ring_edges(&mut b);
        for v0 in members(0) {
            for i in 1..=5 {
                b.add_edge(v0, ring_b(i)).expect("in range");
                for w in members(i) {
                    b.add_edge(v0, w).expect("in range");
                }
            }
        }
        for i in 1..=5 {
            let prev = if i == 1 { 5 } else { i - 1 };
            let next = i % 5 + 1;
            for v in members(i) {
                for x in [ring_a(prev), ring_b(i), ring_a(next)] {
                    b.add_edge(v, x).expect("in range");
                }
                for w in members(next) {
                    if rng.gen_bool(spec.density) {
                        b.add_edge(v, w).expect("in range");
                    }
                }
            }
        }
        b.labels(labels.clone()).expect("one label per vertex");
        let g = b.build();
        match is_prismatic(&g) {
            Verdict::Yes(()) => return Ok(g),
            Verdict::No(c) => last = Some(c),
        }
    }
    Err(FamilyError::RetriesExhausted {
        rounds: DEFAULT_RETRIES,
        last: last.map(|c| format!("{c}")),
    })
}

/// Parameters of a mantled L(K3,3): `upper[i] = |V^i+1|`,
/// `lower[i] = |V_i+1|`, and the probability of each edge between two
/// different sets on the same side.
#[derive(Clone, Debug, PartialEq)]
pub struct MantledSpec {
    pub upper: [usize; 3],
    pub lower: [usize; 3],
    pub density: f64,
    pub seed: u64,
}

/// A mantled L(K3,3): `V^i` is complete to row `i`, `V_i` to column `i`.
/// Same-side edges are redrawn until neither side contains a triangle.
pub fn mantled_line_k33(spec: &MantledSpec) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(FamilyError::SpecInfeasible("density must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut n = 9;
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    let mut labels: Vec<String> = grid_labels("a").collect();
    for (i, &s) in spec.upper.iter().enumerate() {
        upper.push(n..n + s);
        labels.extend((0..s).map(|_| format!("V^{}", i + 1)));
        n += s;
    }
    for (i, &s) in spec.lower.iter().enumerate() {
        lower.push(n..n + s);
        labels.extend((0..s).map(|_| format!("V_{}", i + 1)));
        n += s;
    }
    let mut last = None;
    for _ in 0..DEFAULT_RETRIES {
        let mut b = GraphBuilder::new(n);
        lk33_edges(&mut b, 0);
        for i in 1..=3 {
            for v in upper[i - 1].clone() {
                for j in 1..=3 {
                    b.add_edge(v, lk33_index(i, j)).expect("in range");
                }
            }
            for v in lower[i - 1].clone() {
                for j in 1..=3 {
                    b.add_edge(v, lk33_index(j, i)).expect("in range");
                }
            }
        }
        for side in [&upper, &lower] {
            for x in 0..3 {
                for y in x + 1..3 {
                    for u in side[x].clone() {
                        for v in side[y].clone() {
                            if rng.gen_bool(spec.density) {
                                b.add_edge(u, v).expect("in range");
                            }
                        }
                    }
                }
            }
        }
        b.labels(labels.clone()).expect("one label per vertex");
        let g = b.build();
        let side_triangle = g.triangles().into_iter().find(|t| t.vertices().iter().all(|&v| v >= 9));
        if let Some(t) = side_triangle {
            last = Some(format!("triangle {t} inside one side"));
            continue;
        }
        match is_prismatic(&g) {
            Verdict::Yes(()) => return Ok(g),
            Verdict::No(c) => last = Some(format!("{c}")),
        }
    }
    Err(FamilyError::RetriesExhausted {
        rounds: DEFAULT_RETRIES,
        last,
    })
}
