//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the nauty encoding: a size prefix followed by the upper
//! triangle of the adjacency matrix in column order, six bits per byte,
//! each byte offset by 63. Orders up to 62 use the one-byte prefix; 63 and
//! 64 use the `~` form.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte {b:#04x}")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("unsupported size prefix".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Edge-list text: first line is the order, then one `u v` pair per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses edge-list text. Blank lines and `#` comments are skipped. A
/// leading line holding a single integer fixes the order; without it the
/// order is one more than the largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::EdgeList(format!("line {}: bad token {t:?}", lineno + 1))))
            .collect::<Result<Vec<_>>>()?;
        match (first, nums.as_slice()) {
            (true, &[n]) => declared = Some(n),
            (_, &[u, v]) => edges.push((u, v)),
            _ => return Err(Error::EdgeList(format!("line {}: expected `u v`", lineno + 1))),
        }
        first = false;
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < implied => {
            return Err(Error::EdgeList(format!("order {n} too small for vertex {}", implied - 1)))
        }
        Some(n) => n,
        None => implied,
    };
    Graph::from_edges(n, edges)
}

/// Accepts either format: text whose first meaningful line is made of
/// decimal integers is read as an edge list, anything else as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit())) {
        parse_edge_list(text)
    } else {
        decode(first)
    }
}
