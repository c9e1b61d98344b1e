//! Text formats: graph6 (short form only), a plain edge list and DOT output.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order the short graph6 header can express.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Encodes `g` in graph6: one header byte `n + 63`, then the upper triangle
/// of the adjacency matrix column by column (`x(0,1), x(0,2), x(1,2), ...`)
/// packed six bits per byte, big-endian, each byte offset by 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Capacity {
            what: "graph6 short-form order",
            value: n,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes a short-form graph6 string. Surrounding whitespace is ignored;
/// anything else that is not exact graph6 is an error carrying the offending
/// byte offset.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim().as_bytes();
    let Some(&header) = body.first() else {
        return Err(Error::parse(lead, "empty graph6 string"));
    };
    if header == b'~' {
        return Err(Error::parse(
            lead,
            "long-form graph6 (n > 62) is not supported",
        ));
    }
    if !(63..=126).contains(&header) {
        return Err(Error::parse(
            lead,
            format!("invalid header byte {header:#04x}"),
        ));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != 1 + nbytes {
        let offset = lead + body.len().min(1 + nbytes);
        return Err(Error::parse(
            offset,
            format!(
                "expected {} bytes for n = {n}, found {}",
                1 + nbytes,
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let pos = 1 + k / 6;
            let byte = body[pos];
            if !(63..=126).contains(&byte) {
                return Err(Error::parse(
                    lead + pos,
                    format!("invalid byte {byte:#04x}"),
                ));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbytes > 0 {
        let pos = nbytes;
        let last = body[pos];
        if !(63..=126).contains(&last) {
            return Err(Error::parse(
                lead + pos,
                format!("invalid byte {last:#04x}"),
            ));
        }
        let pad = nbytes * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(lead + pos, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Writes the `n m` header followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format. Tokens may be separated by any whitespace
/// (or `;`, for inline use on a command line). Error offsets point at the
/// offending token.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let is_sep = |c: char| c.is_whitespace() || c == ';';
    let mut spans = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (is_sep(c), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                spans.push((s, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        spans.push((s, &text[s..]));
    }
    let mut tokens = spans.into_iter();
    let mut next_int = |what: &str| -> Result<usize> {
        match tokens.next() {
            Some((pos, tok)) => tok
                .parse::<usize>()
                .map_err(|_| Error::parse(pos, format!("expected {what}, found `{tok}`"))),
            None => Err(Error::parse(
                text.len(),
                format!("unexpected end of input, expected {what}"),
            )),
        }
    };
    let n = next_int("vertex count")?;
    let m = next_int("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_int("edge endpoint")?;
        let v = next_int("edge endpoint")?;
        edges.push((u, v));
    }
    if let Some((pos, tok)) = tokens.next() {
        return Err(Error::parse(
            pos,
            format!("trailing token `{tok}` after {m} edges"),
        ));
    }
    Graph::new(n, edges)
}

/// Renders `g` as an undirected DOT graph.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
