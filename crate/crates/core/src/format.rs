//! Graph ingestion and emission: graph6 and a plain edge-list syntax.
//!
//! graph6 (short form, `n <= 62`): one byte `n + 63`, then the upper triangle
//! of the adjacency matrix read column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, padded with zeros to a multiple of six bits. Each six-bit
//! group, most significant bit first, is written as `group + 63`.
//!
//! Edge list: first token is the order, then pairs `u v`, with tokens
//! separated by whitespace and/or semicolons. Labels are 0-based.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_ORDER};

const G6: &str = "graph6";
const EDGES: &str = "edge-list";

/// Upper-triangle pairs in graph6 column order.
pub(crate) fn triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Builds a graph from an upper-triangle mask whose bit `k` is the `k`-th
/// pair of [`triangle_pairs`].
pub fn graph_from_triangle_mask(n: usize, mask: u64) -> Graph {
    assert!(n * n.saturating_sub(1) / 2 <= 64, "triangle mask too wide for order {n}");
    let mut rows = vec![0u64; n];
    for (k, (i, j)) in triangle_pairs(n).enumerate() {
        if mask & bit(k) != 0 {
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
    }
    Graph::from_rows(rows).expect("triangle mask yields a simple graph")
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n + 63) as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in triangle_pairs(n) {
        group = (group << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(G6, s, "empty string"));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        let bad = s[pos..].chars().next().map(String::from).unwrap_or_default();
        return Err(Error::parse(G6, bad, "byte outside the printable range 63..=126"));
    }
    if first == 126 {
        return Err(Error::parse(G6, s, format!("orders above {MAX_ORDER} are not supported")));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = 1 + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            G6,
            s,
            format!("order {n} needs {expected} bytes, found {}", bytes.len()),
        ));
    }
    let data = &bytes[1..];
    let bit_at = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::edgeless(n);
    for (k, (i, j)) in triangle_pairs(n).enumerate() {
        if bit_at(k) {
            g.add_edge(i, j);
        }
    }
    if (pairs..data.len() * 6).any(bit_at) {
        return Err(Error::parse(G6, s, "nonzero padding bits"));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = g.order().to_string();
    for (u, v) in g.edges() {
        out.push_str(&format!("; {u} {v}"));
    }
    out
}

pub fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut tokens = s
        .split(|c: char| c.is_whitespace() || c == ';')
        .filter(|t| !t.is_empty());
    let number = |tok: &str| -> Result<usize> {
        tok.parse::<usize>()
            .map_err(|_| Error::parse(EDGES, tok, "expected a non-negative integer"))
    };
    let first = tokens.next().ok_or_else(|| Error::parse(EDGES, s, "missing order"))?;
    let n = number(first)?;
    if n > MAX_ORDER {
        return Err(Error::parse(EDGES, first, format!("order exceeds {MAX_ORDER}")));
    }
    let mut g = Graph::edgeless(n);
    while let Some(a) = tokens.next() {
        let b = tokens
            .next()
            .ok_or_else(|| Error::parse(EDGES, a, "dangling endpoint without a partner"))?;
        let (u, v) = (number(a)?, number(b)?);
        for (tok, x) in [(a, u), (b, v)] {
            if x >= n {
                return Err(Error::parse(EDGES, tok, format!("label out of range for order {n}")));
            }
        }
        if u == v {
            return Err(Error::parse(EDGES, a, "loops are not allowed"));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Parses either syntax. Input containing whitespace, `;` or only digits is
/// an edge list; anything else is graph6 (whose alphabet has no digits).
pub fn parse_graph(input: &str) -> Result<Graph> {
    let s = input.trim();
    let edge_like = s.contains(|c: char| c.is_whitespace() || c == ';')
        || (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()));
    if edge_like {
        parse_edge_list(s)
    } else {
        from_graph6(s)
    }
}
