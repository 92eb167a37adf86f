//! Interchange formats: graph6 (short form, n <= 62), DOT text, and a
//! JSON adjacency document `{"n", "edges", "name"?, "ranking"?}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_N};
use crate::solver::Ranking;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty graph6 record")]
    Empty,
    #[error("graph6 byte {0:#x} outside 63..=126")]
    BadByte(u8),
    #[error("graph6 order {0} exceeds the {MAX_N}-vertex short form")]
    OrderTooLarge(usize),
    #[error("graph6 record has {got} payload bytes, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("malformed JSON document: {0}")]
    BadJson(String),
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse one graph6 record (short form only).
pub fn parse_graph6(line: &str) -> Result<Graph, CodecError> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(CodecError::BadByte(b));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_N {
        return Err(CodecError::OrderTooLarge(n));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(CodecError::BadLength {
            got: bytes.len() - 1,
            expected,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    // Upper triangle, column-major: columns j = 1..n, rows i = 0..j.
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Emit the canonical-length graph6 record for `g`.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Emit DOT text. With a ranking, vertex labels are the rank values;
/// otherwise the vertex ids. Output is deterministic.
pub fn emit_dot(g: &Graph, ranking: Option<&Ranking>) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        let label = match ranking {
            Some(r) => r.labels()[v].to_string(),
            None => v.to_string(),
        };
        out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// JSON adjacency document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ranking: Option<Vec<u32>>,
}

pub fn emit_json(g: &Graph, name: Option<&str>, ranking: Option<&Ranking>) -> String {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges(),
        name: name.map(str::to_owned),
        ranking: ranking.map(|r| r.labels().to_vec()),
    };
    serde_json::to_string(&doc).expect("document serializes")
}

pub fn parse_json(text: &str) -> Result<(Graph, GraphDoc), CodecError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| CodecError::BadJson(e.to_string()))?;
    let g = Graph::build(doc.n, &doc.edges)?;
    if let Some(r) = &doc.ranking {
        if r.len() != doc.n {
            return Err(CodecError::Inconsistent(format!(
                "ranking covers {} vertices, graph has {}",
                r.len(),
                doc.n
            )));
        }
    }
    Ok((g, doc))
}
