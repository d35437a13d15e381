//! Graph serialization: the standard graph6 encoding and a whitespace
//! edge-list format ('#' comments, blank lines ignored, one `u v` pair per
//! line, a single token declares an isolated vertex).

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: malformed header at byte {offset}: {reason}")]
    MalformedHeader { offset: usize, reason: String },
    #[error("graph6: byte {offset} (0x{byte:02x}) outside printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes after the header, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("edge-list line {line}: expected 1 or 2 tokens, found {found}")]
    BadTokenCount { line: usize, found: usize },
    #[error("edge-list line {line}: non-simple edge ({reason})")]
    NonSimpleEdge { line: usize, reason: String },
    #[error("input is empty")]
    Empty,
}

pub fn parse_graph(input: &[u8], format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(input),
        GraphFormat::EdgeList => parse_edge_list(input),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::EdgeList => emit_edge_list(g),
    }
}

const G6_HEADER: &[u8] = b">>graph6<<";

/// Parse one graph6 value (optionally prefixed by the `>>graph6<<` header).
/// Supports the 1-byte (n ≤ 62) and 4-byte (n ≤ 258047) size encodings.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, ParseError> {
    let mut data = input;
    if data.starts_with(G6_HEADER) {
        data = &data[G6_HEADER.len()..];
    }
    let data: &[u8] = match data.split(|&b| b == b'\n').next() {
        Some(line) => line.strip_suffix(b"\r").unwrap_or(line),
        None => data,
    };
    if data.is_empty() {
        return Err(ParseError::Empty);
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::ByteOutOfRange { offset: i, byte: b });
        }
    }
    let (n, header_len) = if data[0] != 126 {
        ((data[0] - 63) as usize, 1)
    } else {
        if data.len() >= 2 && data[1] == 126 {
            return Err(ParseError::MalformedHeader {
                offset: 1,
                reason: "8-byte size encoding (n > 258047) not supported".into(),
            });
        }
        if data.len() < 4 {
            return Err(ParseError::MalformedHeader {
                offset: 0,
                reason: "truncated 4-byte size encoding".into(),
            });
        }
        let n = (((data[1] - 63) as usize) << 12)
            | (((data[2] - 63) as usize) << 6)
            | ((data[3] - 63) as usize);
        if n <= 62 {
            return Err(ParseError::MalformedHeader {
                offset: 0,
                reason: format!("n = {n} must use the 1-byte size encoding"),
            });
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() != expected {
        return Err(ParseError::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::new(n);
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[pos / 6] - 63;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                g.add_edge(u, v).expect("upper-triangle bits are simple");
            }
            pos += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::NonzeroPadding {
                offset: header_len + expected - 1,
            });
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= 258047, "graph too large for the 4-byte size encoding");
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Vertex ids: when every token is a decimal integer and together they form
/// a dense `0..n` set, the numbers are the ids (so emit∘parse round-trips);
/// otherwise tokens are densified in first-appearance order and kept as
/// labels.
pub fn parse_edge_list(input: &[u8]) -> Result<Graph, ParseError> {
    let text = String::from_utf8_lossy(input);
    let mut token_lines: Vec<(usize, Vec<String>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        match tokens.len() {
            0 => {}
            1 | 2 => token_lines.push((lineno + 1, tokens)),
            k => {
                return Err(ParseError::BadTokenCount {
                    line: lineno + 1,
                    found: k,
                })
            }
        }
    }

    let numeric: Option<Vec<Vec<VertexId>>> = token_lines
        .iter()
        .map(|(_, toks)| toks.iter().map(|t| t.parse::<VertexId>().ok()).collect())
        .collect();
    let dense_numeric = numeric.filter(|lines| {
        let seen: std::collections::BTreeSet<VertexId> =
            lines.iter().flatten().copied().collect();
        !seen.is_empty() && seen.len() == seen.last().unwrap() + 1
    });

    let (n, id_lines, names) = match dense_numeric {
        Some(lines) => {
            let n = lines.iter().flatten().max().copied().unwrap_or(0) + 1;
            (n, lines, None)
        }
        None => {
            let mut ids: HashMap<String, VertexId> = HashMap::new();
            let mut names: Vec<String> = Vec::new();
            let lines = token_lines
                .iter()
                .map(|(_, toks)| {
                    toks.iter()
                        .map(|tok| {
                            *ids.entry(tok.clone()).or_insert_with(|| {
                                names.push(tok.clone());
                                names.len() - 1
                            })
                        })
                        .collect()
                })
                .collect();
            (names.len(), lines, Some(names))
        }
    };

    let mut g = Graph::new(n);
    for ((line, _), ids) in token_lines.iter().zip(&id_lines) {
        if let [u, v] = ids[..] {
            g.add_edge(u, v).map_err(|e| ParseError::NonSimpleEdge {
                line: *line,
                reason: e.to_string(),
            })?;
        }
    }
    g.labels = names;
    Ok(g)
}

/// Edges sorted as pairs, one per line, then one line per isolated vertex.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut lines: Vec<String> = g
        .edges()
        .into_iter()
        .map(|(u, v)| format!("{u} {v}"))
        .collect();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            lines.push(format!("{v}"));
        }
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_k1_is_at_sign() {
        let k1 = Graph::new(1);
        assert_eq!(emit_graph6(&k1), "@");
        assert_eq!(parse_graph6(b"@").unwrap(), k1);
    }

    #[test]
    fn graph6_five_vertex_roundtrip() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(emit_graph6(&g), "D?{");
        // header form is accepted on input
        assert_eq!(parse_graph6(b">>graph6<<D?{").unwrap(), g);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(ParseError::WrongLength { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_graph6(&[b'D', 200, b'{']),
            Err(ParseError::ByteOutOfRange { offset: 1, .. })
        ));
        // P3 on 3 vertices uses 3 bits; the low 3 padding bits must be zero
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let enc = emit_graph6(&p3);
        let mut bad = enc.into_bytes();
        *bad.last_mut().unwrap() += 1;
        assert!(matches!(
            parse_graph6(&bad),
            Err(ParseError::NonzeroPadding { .. })
        ));
    }

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list(b"0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(emit_edge_list(&p3), "0 1\n1 2");

        let star = parse_edge_list(b"0 1\n0 2\n0 3\n0 4").unwrap();
        assert_eq!(star.n(), 5);
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);
    }

    #[test]
    fn edge_list_comments_blanks_isolated() {
        let g = parse_edge_list(b"# a comment\n\na b # trailing\n\nc\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            g.labels,
            Some(vec!["a".into(), "b".into(), "c".into()])
        );
        assert_eq!(emit_edge_list(&g), "0 1\n2");
    }

    #[test]
    fn edge_list_rejects_non_simple() {
        assert!(matches!(
            parse_edge_list(b"3 3"),
            Err(ParseError::NonSimpleEdge { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list(b"0 1\n1 0"),
            Err(ParseError::NonSimpleEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(b"0 1 2"),
            Err(ParseError::BadTokenCount { line: 1, found: 3 })
        ));
    }
}
