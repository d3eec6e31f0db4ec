//! Text formats: graph6 (short form, n <= 62) and a plain edge-list format
//! (`n m` on the first line, then one `u v` pair per line, 0-based).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph as a single graph6 line (short form only).
///
/// Layout: one header byte `n + 63`, then the upper-triangle adjacency bits
/// in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six per byte
/// starting from the most significant bit, each byte offset by 63.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::TooLarge(format!(
            "graph6 short form handles n <= 62, got {n}"
        )));
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(adj[u * n + v]);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// Parses one graph6 line (short form). Trailing CR/LF is tolerated;
/// anything else after the data characters is an error.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let &header = bytes
        .first()
        .ok_or_else(|| Error::Graph6Header("empty line".into()))?;
    if header == 126 {
        return Err(Error::Graph6Header(
            "long form (n > 62) is not supported".into(),
        ));
    }
    if !(63..=125).contains(&header) {
        return Err(Error::Graph6Header(format!(
            "first byte {header:#04x} is not a short-form size"
        )));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < nchars {
        return Err(Error::Graph6Truncated {
            expected: nchars,
            found: data.len(),
        });
    }
    if data.len() > nchars {
        return Err(Error::Graph6Trailing(format!(
            "{} extra byte(s) after the data characters",
            data.len() - nchars
        )));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6NonPrintable { byte: b, pos: i + 1 });
        }
    }
    let bit = |i: usize| -> bool {
        let b = data[i / 6] - 63;
        (b >> (5 - i % 6)) & 1 == 1
    };
    // padding bits past the triangle must be zero
    for i in nbits..nchars * 6 {
        if bit(i) {
            return Err(Error::Graph6Trailing("nonzero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, edges)
}

/// Writes the edge-list text form.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text form. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing 'n m' header line".into()))?;
    let mut it = head.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header line '{head}'")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad header line '{head}'")))?;
    if it.next().is_some() {
        return Err(Error::EdgeList(format!("extra tokens in header '{head}'")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line '{line}'")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line '{line}'")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("extra tokens in edge line '{line}'")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header announced {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}
