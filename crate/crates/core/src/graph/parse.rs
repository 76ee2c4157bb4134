//! Text input formats: whitespace edge lists and graph6.

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
}

/// Parses `u v` lines, with an optional leading line holding the vertex count.
///
/// Blank lines and lines starting with `#` are ignored. Without a declared
/// count the graph has `1 + max id` vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Malformed { line, message: format!("`{s}` is not a vertex id") })
        };
        match fields.as_slice() {
            [count] if !seen_content => declared = Some(number(count)?),
            [u, v] => edges.push((number(u)?, number(v)?, line)),
            _ => return Err(ParseError::Malformed { line, message: format!("expected `u v`, found `{trimmed}`") }),
        }
        seen_content = true;
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    let mut adj = vec![Vec::new(); n];
    for (u, v, line) in edges {
        if u == v {
            return Err(ParseError::Graph { line, source: GraphError::SelfLoop(u) });
        }
        if let Some(&vertex) = [u, v].iter().find(|&&w| w >= n) {
            return Err(ParseError::Graph { line, source: GraphError::VertexOutOfRange { vertex, n } });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// Decodes one graph6 string (an optional `>>graph6<<` header and surrounding
/// whitespace are tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6Byte { offset, byte });
    }
    let short = |expected| ParseError::Graph6Length { expected, found: bytes.len() };
    let six = |range: std::ops::Range<usize>| range.fold(0usize, |acc, i| (acc << 6) | (bytes[i] - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(short(1)),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(short(8));
            }
            (six(2..8), 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(short(4));
            }
            (six(1..4), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = body + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(short(expected));
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[body + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
            k += 1;
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// Encodes `g` as graph6 without header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_six = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_six(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_six(&mut out, n, 6);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
