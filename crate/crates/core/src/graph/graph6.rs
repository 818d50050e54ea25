//! graph6 reader and writer (no `>>graph6<<` header).
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte with the
//! first bit most significant, and each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(parse_err(
            offset,
            format!("byte 0x{b:02x} outside graph6 range 63..=126"),
        )),
        None => Err(parse_err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 line. A trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            let mut n = 0usize;
            for i in 0..6 {
                n = (n << 6) | sextet(bytes, 2 + i)? as usize;
            }
            (n, 8)
        } else {
            let mut n = 0usize;
            for i in 0..3 {
                n = (n << 6) | sextet(bytes, 1 + i)? as usize;
            }
            (n, 4)
        }
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n == 0 {
        return Err(parse_err(
            0,
            "graph6 order 0 is not a graph here (need at least one vertex)",
        ));
    }

    let bits = n * (n - 1) / 2;
    let data_len = bits.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(parse_err(
            bytes.len(),
            format!("expected {data_len} data bytes for n={n}"),
        ));
    }
    if bytes.len() > pos + data_len {
        return Err(parse_err(pos + data_len, "trailing bytes after graph6 data"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if k.is_multiple_of(6) {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(parse_err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Encodes in the short form, so `n` must be at most 62.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_MAX {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 12 + 1);
    out.push(n as u8 + BIAS);
    let mut k = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                current |= 1 << (5 - k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(current + BIAS);
                current = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(current + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(encode_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&complete(3)).unwrap(), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(encode_graph6(&complete(4)).unwrap(), "C~");
    }

    #[test]
    fn petersen_round_trip() {
        // Standard graph6 string for the Petersen graph.
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(encode_graph6(&g).unwrap(), "IheA@GUAo");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("B\x10"), Err(Error::Parse { offset: 1, .. })));
        // n=2 uses one bit; any of the five padding bits set is invalid.
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(parse_graph6("Bw\n").is_ok());
    }

    #[test]
    fn long_form_parses() {
        // ~??~ encodes n=63 in the 4-byte header; the body is all zeros.
        let mut s = String::from("~??~");
        s.push_str(&"?".repeat((63 * 62 / 2usize).div_ceil(6)));
        let g = parse_graph6(&s).unwrap();
        assert_eq!(g.n(), 63);
        assert_eq!(g.m(), 0);
        assert!(matches!(encode_graph6(&g), Err(Error::UnsupportedOrder(63))));
    }
}
