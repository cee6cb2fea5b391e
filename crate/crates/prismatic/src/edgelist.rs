//! The edge-list text format.
//!
//! ```text
//! # labels
//! # 0 X_1/R
//! # 1 X_2/hat
//! 2 1
//! 0 1
//! ```
//!
//! An optional `# labels` block of `# <index> <label>` lines comes first;
//! every other `#` line is a comment. Then `n m` and `m` lines `u v`.
//! Output lists edges sorted, with LF line endings.

use std::fmt::Write as _;

use prismatic_core::{Graph, GraphBuilder};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: prismatic_core::GraphError,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(syntax(line, format!("expected two integers, found {text:?}"))),
    }
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut in_labels = false;
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut edges = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if let Some(comment) = l.strip_prefix('#') {
            let c = comment.trim();
            if header.is_none() && c == "labels" {
                in_labels = true;
            } else if in_labels && header.is_none() {
                let (idx, label) = c.split_once(' ').unwrap_or((c, ""));
                let idx = idx
                    .parse()
                    .map_err(|_| syntax(line, format!("bad label line {raw:?}")))?;
                labels.push((line, idx, label.to_string()));
            }
            continue;
        }
        if l.is_empty() {
            continue;
        }
        in_labels = false;
        let (a, b) = numbers(line, l)?;
        match &mut builder {
            None => {
                header = Some((a, b));
                builder = Some(GraphBuilder::new(a));
            }
            Some(bld) => {
                bld.add_edge(a, b).map_err(|source| ParseError::Graph { line, source })?;
                edges += 1;
            }
        }
    }
    let (Some((n, m)), Some(mut b)) = (header, builder) else {
        return Err(syntax(0, "missing `n m` header"));
    };
    if edges != m {
        return Err(syntax(0, format!("header announces {m} edges, found {edges}")));
    }
    if !labels.is_empty() {
        let mut out = vec![None; n];
        for (line, idx, label) in labels {
            if idx >= n || out[idx].is_some() {
                return Err(syntax(line, format!("label index {idx} out of range or repeated")));
            }
            out[idx] = Some(label);
        }
        let out: Option<Vec<String>> = out.into_iter().collect();
        let out = out.ok_or_else(|| syntax(0, "labels must cover every vertex"))?;
        b.labels(out).map_err(|source| ParseError::Graph { line: 0, source })?;
    }
    Ok(b.build())
}

pub fn emit(g: &Graph) -> String {
    let mut s = String::new();
    if let Some(labels) = g.labels() {
        s.push_str("# labels\n");
        for (i, l) in labels.iter().enumerate() {
            writeln!(s, "# {i} {l}").expect("write to string");
        }
    }
    let edges = g.edges();
    writeln!(s, "{} {}", g.n(), edges.len()).expect("write to string");
    for (u, v) in edges {
        writeln!(s, "{u} {v}").expect("write to string");
    }
    s
}
