//! Generators for the graph families, the good-partition verifier, worn
//! chains and Schlaefli membership.

mod schlafli;
mod special;
mod triangles;
mod worn;

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thiserror::Error;

use crate::graph::Graph;

pub use schlafli::is_schlafli_prismatic;
pub use special::{
    core_ring_of_five, line_k33, line_k33_column_coloring, line_k33_row_coloring, lk33_index, mantled_line_k33,
    prism, ring_of_five, schlafli_complement, MantledSpec, RingOfFiveSpec,
};
pub use triangles::{
    canonical_coloring, cycle_of_triangles, path_of_triangles, verify_good_partition, Clause, GoodPartition,
    PartitionKind, TrianglesSpec, Violation,
};
pub use worn::{worn_chain_compose, ColoredGraph, WornLinks};

/// Draws a seeded generator makes before giving up.
pub const DEFAULT_RETRIES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("SpecInfeasible: {0}")]
    SpecInfeasible(String),
    #[error("SpecInfeasible: no valid draw in {rounds} rounds{}", .last.as_ref().map(|l| alloc::format!("; last rejection: {l}")).unwrap_or_default())]
    RetriesExhausted { rounds: usize, last: Option<String> },
    #[error("MalformedPartition: {0}")]
    MalformedPartition(String),
    #[error("W3Violation: {u} and {v} are not adjacent but one of them lies in a triangle")]
    W3Violation { u: usize, v: usize },
    #[error("InvalidLink: {u} and {v} are not a colour-permitted cross pair")]
    InvalidLink { u: usize, v: usize },
    #[error("ImproperColoring: {u} and {v} are adjacent and share a colour")]
    ImproperColoring { u: usize, v: usize },
}

/// The generated families, without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Prism,
    LineK33,
    Schlafli,
    CoreRingOfFive,
    RingOfFive,
    Mantled,
    Path,
    Cycle,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Prism,
        FamilyKind::LineK33,
        FamilyKind::Schlafli,
        FamilyKind::CoreRingOfFive,
        FamilyKind::RingOfFive,
        FamilyKind::Mantled,
        FamilyKind::Path,
        FamilyKind::Cycle,
    ];

    /// A random spec of this family. `max_part` bounds every optional set;
    /// paths get `1..=max_len` hats and cycles `n` in `{5, 8}`.
    pub fn random_spec(self, seed: u64, max_part: usize, max_len: usize) -> FamilySpec {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sizes = |rng: &mut ChaCha8Rng, k: usize| -> Vec<usize> { (0..k).map(|_| rng.gen_range(0..=max_part)).collect() };
        match self {
            FamilyKind::Prism => FamilySpec::Prism,
            FamilyKind::LineK33 => FamilySpec::LineK33,
            FamilyKind::Schlafli => FamilySpec::Schlafli,
            FamilyKind::CoreRingOfFive => FamilySpec::CoreRingOfFive,
            FamilyKind::RingOfFive => {
                let mut s: [usize; 6] = sizes(&mut rng, 6).try_into().expect("six sizes");
                // A nonempty V_0 only survives without V_i-V_i+1 edges.
                let with_v0 = s[0] > 0 && rng.gen_bool(0.5);
                if !with_v0 {
                    s[0] = 0;
                }
                FamilySpec::RingOfFive(RingOfFiveSpec {
                    sizes: s,
                    density: if with_v0 { 0.0 } else { rng.gen_range(0.0..=1.0) },
                    seed: rng.gen(),
                })
            }
            FamilyKind::Mantled => {
                let upper = sizes(&mut rng, 3).try_into().expect("three sizes");
                let lower = sizes(&mut rng, 3).try_into().expect("three sizes");
                FamilySpec::Mantled(MantledSpec {
                    upper,
                    lower,
                    density: rng.gen_range(0.0..=0.5),
                    seed: rng.gen(),
                })
            }
            FamilyKind::Path => {
                let n = rng.gen_range(1..=max_len.max(1));
                FamilySpec::Path(TrianglesSpec::random(PartitionKind::Path, n, max_part, rng.gen()))
            }
            FamilyKind::Cycle => {
                let n = if rng.gen_bool(0.5) { 5 } else { 8 };
                FamilySpec::Cycle(TrianglesSpec::random(PartitionKind::Cycle, n, max_part, rng.gen()))
            }
        }
    }
}

/// A family and its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Prism,
    LineK33,
    Schlafli,
    CoreRingOfFive,
    RingOfFive(RingOfFiveSpec),
    Mantled(MantledSpec),
    Path(TrianglesSpec),
    Cycle(TrianglesSpec),
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Prism => FamilyKind::Prism,
            FamilySpec::LineK33 => FamilyKind::LineK33,
            FamilySpec::Schlafli => FamilyKind::Schlafli,
            FamilySpec::CoreRingOfFive => FamilyKind::CoreRingOfFive,
            FamilySpec::RingOfFive(_) => FamilyKind::RingOfFive,
            FamilySpec::Mantled(_) => FamilyKind::Mantled,
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Prism => "prism",
            FamilySpec::LineK33 => "line_k33",
            FamilySpec::Schlafli => "schlafli",
            FamilySpec::CoreRingOfFive => "core_ring_of_five",
            FamilySpec::RingOfFive(_) => "ring_of_five",
            FamilySpec::Mantled(_) => "mantled",
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            FamilySpec::RingOfFive(s) => Some(s.seed),
            FamilySpec::Mantled(s) => Some(s.seed),
            FamilySpec::Path(s) | FamilySpec::Cycle(s) => Some(s.seed),
            _ => None,
        }
    }

    /// Replaces the seed of a seeded family; fixed graphs are unchanged.
    pub fn with_seed(mut self, seed: u64) -> Self {
        match &mut self {
            FamilySpec::RingOfFive(s) => s.seed = seed,
            FamilySpec::Mantled(s) => s.seed = seed,
            FamilySpec::Path(s) | FamilySpec::Cycle(s) => s.seed = seed,
            _ => {}
        }
        self
    }
}

/// A generated graph, with its good partition for path and cycle families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub partition: Option<GoodPartition>,
}

pub fn generate(spec: &FamilySpec) -> Result<Generated, FamilyError> {
    let plain = |graph| Generated {
        graph,
        partition: None,
    };
    Ok(match spec {
        FamilySpec::Prism => plain(prism()),
        FamilySpec::LineK33 => plain(line_k33()),
        FamilySpec::Schlafli => plain(schlafli_complement()),
        FamilySpec::CoreRingOfFive => plain(core_ring_of_five()),
        FamilySpec::RingOfFive(s) => plain(ring_of_five(s)?),
        FamilySpec::Mantled(s) => plain(mantled_line_k33(s)?),
        FamilySpec::Path(s) | FamilySpec::Cycle(s) => {
            let (graph, p) = match spec {
                FamilySpec::Path(_) => path_of_triangles(s)?,
                _ => cycle_of_triangles(s)?,
            };
            Generated {
                graph,
                partition: Some(p),
            }
        }
    })
}
