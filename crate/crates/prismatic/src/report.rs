//! Machine-readable reports shared by every subcommand.

use prismatic_core::covering::{CliqueCover, CoverStats};
use prismatic_core::recognition::Certificate;
use prismatic_core::VertexSet;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: Option<String>,
    pub subcommand: String,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    /// Wall time, present only when timing was requested so that repeated
    /// runs stay byte-identical.
    pub elapsed_ms: Option<f64>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub kind: String,
    pub detail: String,
    pub vertices: Vec<usize>,
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport {
            kind: c.kind_name().to_string(),
            detail: c.to_string(),
            vertices: c.vertices.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub t: usize,
    pub m: usize,
    pub r: usize,
    pub size: usize,
}

impl StatsReport {
    pub fn of(c: &CliqueCover) -> Self {
        let CoverStats {
            triangles,
            edges,
            singletons,
        } = c.stats();
        StatsReport {
            t: triangles,
            m: edges,
            r: singletons,
            size: c.size(),
        }
    }
}

pub fn parts_json(c: &CliqueCover) -> Value {
    c.parts().iter().map(|p| p.as_slice().to_vec()).collect::<Vec<_>>().into()
}

/// Reads the `parts` of a cover report back into a [`CliqueCover`].
pub fn cover_from_report(r: &Report) -> Option<CliqueCover> {
    let parts: Vec<Vec<usize>> = serde_json::from_value(r.result.get("parts")?.clone()).ok()?;
    Some(CliqueCover::new(parts.into_iter().map(VertexSet::from).collect()))
}
