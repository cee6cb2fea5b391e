//! `key = value` text documents describing a [`FamilySpec`].
//!
//! ```text
//! family = path
//! n = 2
//! hats = 1,1
//! rest = 0,1
//! pairs = 1,1
//! rest_density = 0.5
//! seed = 7
//! ```
//!
//! Blank lines and `#` comments are ignored. Missing keys take the
//! defaults of [`builtin`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use prismatic_core::families::{FamilySpec, MantledSpec, RingOfFiveSpec, TrianglesSpec};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("key {key:?}: {msg}")]
    Value { key: String, msg: String },
    #[error("unknown key {0:?} for this family")]
    UnknownKey(String),
}

/// Family names accepted by [`builtin`], including the named fixtures.
pub const FAMILIES: &[&str] = &[
    "prism",
    "line_k33",
    "schlafli",
    "core_ring_of_five",
    "ring_of_five",
    "mantled",
    "path",
    "cycle",
    "minimal",
    "ladder",
    "ladder500",
    "cycle8",
];

/// The default spec of a family or fixture name.
pub fn builtin(name: &str) -> Result<FamilySpec, SpecError> {
    Ok(match name {
        "prism" => FamilySpec::Prism,
        "line_k33" => FamilySpec::LineK33,
        "schlafli" => FamilySpec::Schlafli,
        "core_ring_of_five" => FamilySpec::CoreRingOfFive,
        "ring_of_five" => FamilySpec::RingOfFive(RingOfFiveSpec {
            sizes: [0, 1, 1, 1, 1, 1],
            density: 0.5,
            seed: 0,
        }),
        "mantled" => FamilySpec::Mantled(MantledSpec {
            upper: [1, 1, 1],
            lower: [1, 1, 1],
            density: 0.5,
            seed: 0,
        }),
        "path" | "ladder" => FamilySpec::Path(TrianglesSpec::ladder()),
        "minimal" => FamilySpec::Path(TrianglesSpec::minimal()),
        "ladder500" => FamilySpec::Path(TrianglesSpec::padded_ladder(500, 0)),
        "cycle" | "cycle8" => FamilySpec::Cycle(TrianglesSpec::cycle8()),
        other => return Err(SpecError::UnknownFamily(other.to_string())),
    })
}

fn value<T: FromStr>(key: &str, v: &str) -> Result<T, SpecError> {
    v.parse().map_err(|_| SpecError::Value {
        key: key.to_string(),
        msg: format!("cannot parse {v:?}"),
    })
}

fn list(key: &str, v: &str) -> Result<Vec<usize>, SpecError> {
    if v.is_empty() {
        return Ok(Vec::new());
    }
    v.split(',').map(|x| value(key, x.trim())).collect()
}

fn triple<const N: usize>(key: &str, v: &str) -> Result<[usize; N], SpecError> {
    list(key, v)?.try_into().map_err(|_| SpecError::Value {
        key: key.to_string(),
        msg: format!("expected {N} comma-separated sizes"),
    })
}

/// Parses a spec document. `default_family` applies when the document has
/// no `family` key.
pub fn parse(text: &str, default_family: Option<&str>) -> Result<FamilySpec, SpecError> {
    let mut kv = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (k, v) = l.split_once('=').ok_or(SpecError::Syntax(i + 1))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let family = match kv.remove("family") {
        Some(f) => f,
        None => default_family
            .ok_or_else(|| SpecError::UnknownFamily(String::new()))?
            .to_string(),
    };
    let mut spec = builtin(&family)?;
    match &mut spec {
        FamilySpec::RingOfFive(s) => {
            for (k, v) in &kv {
                match k.as_str() {
                    "sizes" => s.sizes = triple(k, v)?,
                    "density" => s.density = value(k, v)?,
                    "seed" => s.seed = value(k, v)?,
                    _ => return Err(SpecError::UnknownKey(k.clone())),
                }
            }
        }
        FamilySpec::Mantled(s) => {
            for (k, v) in &kv {
                match k.as_str() {
                    "upper" => s.upper = triple(k, v)?,
                    "lower" => s.lower = triple(k, v)?,
                    "density" => s.density = value(k, v)?,
                    "seed" => s.seed = value(k, v)?,
                    _ => return Err(SpecError::UnknownKey(k.clone())),
                }
            }
        }
        FamilySpec::Path(s) | FamilySpec::Cycle(s) => {
            for (k, v) in &kv {
                match k.as_str() {
                    "n" => s.n = value(k, v)?,
                    "hats" => s.hats = list(k, v)?,
                    "rest" => s.rest = list(k, v)?,
                    "pairs" => s.pairs = list(k, v)?,
                    "rest_density" => s.rest_density = value(k, v)?,
                    "seed" => s.seed = value(k, v)?,
                    _ => return Err(SpecError::UnknownKey(k.clone())),
                }
            }
        }
        _ => {
            if let Some(k) = kv.keys().next() {
                return Err(SpecError::UnknownKey(k.clone()));
            }
        }
    }
    Ok(spec)
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn emit(spec: &FamilySpec) -> String {
    let mut s = String::new();
    let mut put = |k: &str, v: String| writeln!(s, "{k} = {v}").expect("write to string");
    put("family", spec.name().to_string());
    match spec {
        FamilySpec::RingOfFive(r) => {
            put("sizes", join(&r.sizes));
            put("density", r.density.to_string());
            put("seed", r.seed.to_string());
        }
        FamilySpec::Mantled(m) => {
            put("upper", join(&m.upper));
            put("lower", join(&m.lower));
            put("density", m.density.to_string());
            put("seed", m.seed.to_string());
        }
        FamilySpec::Path(t) | FamilySpec::Cycle(t) => {
            put("n", t.n.to_string());
            put("hats", join(&t.hats));
            put("rest", join(&t.rest));
            put("pairs", join(&t.pairs));
            put("rest_density", t.rest_density.to_string());
            put("seed", t.seed.to_string());
        }
        _ => {}
    }
    s
}
