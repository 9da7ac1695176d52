//! Text formats: the `n=<order>` edge list, the `{ "n", "edges" }` JSON form,
//! and graph6.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `n=<order>` header")]
    MissingHeader,
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n=4
/// 0 1
/// 1 2   # trailing comments are fine
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if order.is_none() {
            let rest = line.strip_prefix("n=").or_else(|| line.strip_prefix("n ="));
            match rest {
                Some(rest) => {
                    let n = rest.trim().parse::<usize>().map_err(|e| ParseError::Syntax {
                        line: line_no,
                        msg: format!("bad order: {e}"),
                    })?;
                    order = Some(n);
                    continue;
                }
                None => return Err(ParseError::MissingHeader),
            }
        }
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize, ParseError> {
            let tok = parts.next().ok_or_else(|| ParseError::Syntax {
                line: line_no,
                msg: "expected `u v`".into(),
            })?;
            tok.parse().map_err(|e| ParseError::Syntax {
                line: line_no,
                msg: format!("bad vertex `{tok}`: {e}"),
            })
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(ParseError::Syntax {
                line: line_no,
                msg: "trailing tokens after edge".into(),
            });
        }
        edges.push((u, v));
    }
    let order = order.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(order, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    Ok(serde_json::from_str(text)?)
}

/// Accepts either format, choosing JSON when the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

/// Decodes one graph6 line (without the optional `>>graph6<<` header).
pub fn from_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: &str| ParseError::Graph6(msg.to_string());
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(bad("truncated order"));
            }
            let n = r[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(bad("truncated order"));
            }
            let n = r[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[3..])
        }
        [b, r @ ..] => ((b - 63) as usize, r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(bad("wrong body length"));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Reads a graph6 stream: one graph per non-empty line, optional header.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l).trim())
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}
