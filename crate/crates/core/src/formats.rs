//! graph6 and edge-list codecs.
//!
//! graph6: one size byte `63 + n` (`n ≤ 62`), then the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), …`),
//! packed six bits per byte, most significant first, zero-padded, each byte
//! offset by 63. Decoding is strict: trailing padding bits must be zero and the
//! payload length must match exactly.
//!
//! Edge list: a header line `<n> <m>`, then `m` lines `u v` with 0-based ids.
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{capacity, Error, Result};
use crate::graph::Graph;

/// Largest order with a single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A trailing `\n` (or `\r\n`) is accepted; the
/// optional `>>graph6<<` header is not.
pub fn decode_graph6(line: &[u8]) -> Result<Graph> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let (&head, payload) = line
        .split_first()
        .ok_or_else(|| g6_err(0, "empty record"))?;
    if !(63..=126).contains(&head) {
        return Err(g6_err(0, format!("size byte {head} outside 63..=126")));
    }
    if head == 126 {
        return Err(g6_err(
            0,
            "multi-byte size headers (n > 62) are not supported",
        ));
    }
    let n = (head - 63) as usize;
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(g6_err(
            1 + payload.len().min(expected),
            format!(
                "expected {expected} payload bytes for n = {n}, found {}",
                payload.len()
            ),
        ));
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (i, &byte) in payload.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(g6_err(1 + i, format!("byte {byte} outside 63..=126")));
        }
        let chunk = byte - 63;
        for b in (0..6).rev() {
            let bit = chunk >> b & 1 == 1;
            if k < total {
                if bit {
                    let (u, v) = pair(k);
                    g.insert_edge(u, v);
                }
            } else if bit {
                return Err(g6_err(1 + i, "nonzero padding bit"));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Upper-triangle index `k` to the pair `(i, j)` with `i < j`, column order.
fn pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Encodes `g` without a trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    capacity("graph6 order", n, GRAPH6_MAX_ORDER)?;
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

/// Decodes every non-empty line of a graph6 file.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l.trim_end().as_bytes()).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 {
                    offset,
                    message: format!("line {}: {message}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}

fn el_err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| el_err(1, "missing header line"))?;
    let (n, m) = two_numbers(hline, header)?;
    capacity("edge-list order", n, crate::graph::MAX_VERTICES)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for (no, line) in lines {
        let (u, v) = two_numbers(no, line)?;
        if u >= n || v >= n {
            return Err(el_err(no, format!("vertex id out of range for n = {n}")));
        }
        if u == v {
            return Err(el_err(no, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(el_err(no, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(el_err(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn two_numbers(no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || {
        it.next()
            .ok_or_else(|| el_err(no, "expected two integers"))?
            .parse::<usize>()
            .map_err(|_| el_err(no, "expected two non-negative integers"))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(el_err(no, "expected exactly two integers"));
    }
    Ok(pair)
}

/// Header line then one `u v` line per edge with `u < v`, sorted; newline-terminated.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Input encodings accepted by [`parse_graphs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

/// Guesses the encoding from the first non-blank line: an edge-list header
/// consists of two integers separated by whitespace, a graph6 record never
/// contains whitespace.
pub fn detect_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() > 1 => InputFormat::EdgeList,
        _ => InputFormat::Graph6,
    }
}

/// All graphs in `text`: one per line for graph6, a single graph for an edge list.
pub fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>> {
    match format {
        InputFormat::Graph6 => decode_graph6_lines(text),
        InputFormat::EdgeList => Ok(vec![parse_edge_list(text)?]),
    }
}
