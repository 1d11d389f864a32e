//! Text formats: a whitespace-separated edge list and graph6.
//!
//! Edge list: first line `n m`, followed by `m` lines `u v` with 0-based
//! labels. Blank lines and anything after `#` on a line are ignored.
//!
//! graph6: the size prefix (one byte for `n <= 62`, `~` plus three bytes up
//! to 258047, `~~` plus six bytes beyond) followed by the upper triangle of
//! the adjacency matrix in column order, packed six bits per byte, offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    let mut next_number = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of input, expected {what}")))?;
        tok.parse()
            .map_err(|_| Error::Parse(format!("invalid {what}: {tok:?}")))
    };
    let n = next_number("vertex count")?;
    let m = next_number("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next_number("edge endpoint")?;
        let v = next_number("edge endpoint")?;
        edges.push((u, v));
    }
    if let Some(extra) = tokens.next() {
        return Err(Error::Parse(format!(
            "trailing data after {m} edges: {extra:?}"
        )));
    }
    Graph::from_edges(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = (byte << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte 0x{b:02x}")));
    }
    let take = |range: std::ops::Range<usize>| -> Result<usize> {
        let chunk = bytes
            .get(range)
            .ok_or_else(|| Error::Parse("truncated graph6 size field".into()))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, offset) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => (take(2..8)?, 8),
        [126, ..] => (take(1..4)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[offset..];
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for n={n}",
            body.len()
        )));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Reads either format: graph6 input starts with a byte in `?..~` (or the
/// `>>graph6<<` header), while an edge list starts with a digit or `#`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.trim_start().bytes().next() {
        None => Err(Error::Parse("empty input".into())),
        Some(b) if b.is_ascii_digit() || b == b'#' => parse_edge_list(text),
        Some(_) => parse_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_known_strings() {
        // P_3 as 0-1-2: bits x01=1, x02=0, x12=1 -> 101000 = 40 -> 'g'.
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()), "A_");
        // Petersen graph as distributed with nauty.
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.order(), 10);
        assert_eq!(pet.size(), 15);
        assert!(pet.degrees().iter().all(|&d| d == 3));
        assert_eq!(to_graph6(&pet), "IheA@GUAo");
    }

    #[test]
    fn graph6_large_prefix() {
        let g = Graph::from_edges(100, [(0, 99), (5, 6)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("Bh").is_err()); // padding bit set
        assert!(parse_graph6("B\u{7f}").is_err());
        assert_eq!(
            parse_graph6(">>graph6<<Bg").unwrap(),
            parse_graph6("Bg").unwrap()
        );
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# a path\n3 2\n0 1   # first\n\n 1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
        assert_eq!(parse_graph(text).unwrap(), g);
        assert_eq!(parse_graph("Bg\n").unwrap(), g);
        assert!(parse_graph("  ").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn formats_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
