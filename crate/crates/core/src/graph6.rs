//! graph6 and plain edge-list text formats.
//!
//! graph6 encodes the order, then the upper triangle of the adjacency matrix
//! in column-major order, six bits per byte, each byte offset by 63. The
//! edge-list format is a header line `n m` followed by `m` lines `u v` with
//! 0-based endpoints.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6Parse {
        offset,
        reason: reason.into(),
    }
}

/// Parses one line of graph6. Leading/trailing whitespace and an optional
/// `>>graph6<<` prefix are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte order form encodes n > 258047, far over our cap
            return Err(g6_err(1, "vertex count over cap"));
        }
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), "truncated multi-byte order"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(g6_err(0, format!("n={n} exceeds cap {MAX_VERTICES}")));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(g6_err(
            bytes.len(),
            format!(
                "truncated bit body: need {need} bytes after header, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > need {
        return Err(g6_err(pos + need, "trailing bytes after bit body"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize; // pair index, column-major upper triangle
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + k / 6] - 63;
            // bits are packed big-endian within each 6-bit group
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    pos += need;
    let _ = pos;
    debug_assert!(g.validate().is_ok());
    Ok(g)
}

/// Encodes a graph under its current labeling.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the plain edge-list format: first line `n m`, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeListParse {
            line: 1,
            reason: "empty input".into(),
        })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::EdgeListParse {
            line,
            reason: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::EdgeListParse {
            line,
            reason: format!("bad {what}"),
        })
    };
    let n = parse_num(it.next(), line_no + 1, "vertex count")?;
    let m = parse_num(it.next(), line_no + 1, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::EdgeListParse {
            line: 0,
            reason: format!("expected {m} edge lines"),
        })?;
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), line_no + 1, "endpoint")?;
        let v = parse_num(it.next(), line_no + 1, "endpoint")?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_vertex_token_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn smallest_token_is_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6Parse { .. })
        ));
        assert!(matches!(
            parse_graph6("   \n"),
            Err(Error::Graph6Parse { .. })
        ));
    }

    #[test]
    fn truncation_and_trailing_bytes_are_rejected() {
        // n=5 needs two body bytes
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{{").is_err());
        assert!(parse_graph6("D?\x07").is_err());
    }

    #[test]
    fn k2_and_edgeless_round_trip() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = emit_graph6(&k2);
        assert_eq!(parse_graph6(&s).unwrap(), k2);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(emit_graph6(&e3), "B?");
        assert_eq!(parse_graph6("B?").unwrap(), e3);
    }

    #[test]
    fn zero_vertices() {
        let g0 = Graph::empty(0).unwrap();
        let s = emit_graph6(&g0);
        assert_eq!(s, "?");
        assert_eq!(parse_graph6(&s).unwrap(), g0);
    }

    #[test]
    fn large_order_header() {
        let g = Graph::from_edges(100, &[(0, 99), (1, 2)]).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn over_cap_rejected() {
        // order header for n = 513
        let n = 513usize;
        let s: String = [
            126u8,
            63 + ((n >> 12) & 63) as u8,
            63 + ((n >> 6) & 63) as u8,
            63 + (n & 63) as u8,
        ]
        .iter()
        .map(|&b| b as char)
        .collect();
        assert!(parse_graph6(&s).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }
}
