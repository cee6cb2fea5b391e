//! The generator corpus sweep behind `families selftest`.

use prismatic_core::covering::{
    bounded_hitting_set, clique_cover, min_clique_cover_oracle, CoverConfig, OracleLimits,
};
use prismatic_core::families::{
    canonical_coloring, generate, is_schlafli_prismatic, verify_good_partition, FamilyKind, Generated,
    PartitionKind,
};
use prismatic_core::recognition::{is_cobridge_free, is_prismatic};
use serde::Serialize;

/// Largest instance on which covers are compared against the oracle.
pub const ORACLE_CHECK_MAX: usize = 14;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Row {
    pub family: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    /// Specs the generator could not realise within its retry budget.
    pub skipped: usize,
    pub first_failure: Option<String>,
}

/// Every invariant that applies to one generated instance; the first one
/// that fails is returned.
pub fn check_instance(gen: &Generated) -> Result<(), String> {
    let g = &gen.graph;
    if let Some(c) = is_prismatic(g).certificate() {
        return Err(format!("not prismatic: {c}"));
    }
    if let Some(p) = &gen.partition {
        match verify_good_partition(g, p) {
            Ok(None) => {}
            Ok(Some(v)) => return Err(format!("bad partition: {v}")),
            Err(e) => return Err(e.to_string()),
        }
        if p.kind == PartitionKind::Path {
            canonical_coloring(g, p).map_err(|e| e.to_string())?;
        }
    }
    let cobridge_free = is_cobridge_free(g).is_yes();
    if cobridge_free && bounded_hitting_set(g, 5).is_none() && is_schlafli_prismatic(g).is_none() {
        return Err("co-bridge-free, no hitting set of size 5 and not Schlaefli-prismatic".into());
    }
    match clique_cover(g, &CoverConfig::default()) {
        Ok((cover, _)) => {
            cover.validate(g).map_err(|e| e.to_string())?;
            if g.n() <= ORACLE_CHECK_MAX {
                let oracle = min_clique_cover_oracle(g, &OracleLimits::default()).map_err(|e| e.to_string())?;
                if oracle.size() != cover.size() {
                    return Err(format!("cover size {} but oracle {}", cover.size(), oracle.size()));
                }
            }
        }
        Err(e) if cobridge_free => return Err(e.to_string()),
        Err(_) => {}
    }
    Ok(())
}

/// `count` seeded instances of every family, seeds `seed..seed + count`.
pub fn sweep(seed: u64, count: usize) -> Vec<Row> {
    FamilyKind::ALL
        .iter()
        .map(|&kind| {
            let mut row = Row::default();
            for s in seed..seed + count as u64 {
                let spec = kind.random_spec(s, 2, 6);
                row.family = spec.name().to_string();
                row.instances += 1;
                let gen = match generate(&spec) {
                    Ok(g) => g,
                    Err(_) => {
                        row.skipped += 1;
                        continue;
                    }
                };
                match check_instance(&gen) {
                    Ok(()) => row.passed += 1,
                    Err(e) => {
                        row.failed += 1;
                        row.first_failure.get_or_insert_with(|| format!("seed {s}: {e}"));
                    }
                }
            }
            row
        })
        .collect()
}
