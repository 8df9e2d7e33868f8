//! graph6 (short form, n <= 62) and a plain edge-list text format.
//!
//! graph6 layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte with 63 added, zero padded to a byte boundary.

use super::Graph;
use crate::error::{Error, Result};

const SHORT_MAX: usize = 62;

/// Decodes one graph6 line. Trailing `\n`/`\r` are ignored; anything else is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::format(0, "empty graph6 string"))?;
    if !(63..=126).contains(&head) {
        return Err(Error::format(
            0,
            format!("header byte {head:#04x} outside 63..=126"),
        ));
    }
    if head == 126 {
        return Err(Error::format(
            0,
            "long-form graph6 (n > 62) is not supported",
        ));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(Error::format(
            1 + body.len(),
            format!(
                "truncated payload: expected {nbytes} bytes for n={n}, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > nbytes {
        return Err(Error::format(
            1 + nbytes,
            format!("trailing data after {nbytes}-byte payload"),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::format(
                1 + i,
                format!("payload byte {b:#04x} outside 63..=126"),
            ));
        }
        let six = b - 63;
        for bit in (0..6).rev() {
            let set = six >> bit & 1 == 1;
            if k < nbits {
                if set {
                    let (u, v) = pair_of(k);
                    g.set_edge(u, v);
                }
            } else if set {
                return Err(Error::format(1 + i, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Index `k` of the column-major upper triangle back to `(row, col)`.
fn pair_of(k: usize) -> (usize, usize) {
    let mut col = 1;
    let mut start = 0;
    while start + col <= k {
        start += col;
        col += 1;
    }
    (k - start, col)
}

/// Encodes a graph of order at most 62.
///
/// Panics on larger graphs, which have no short-form encoding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= SHORT_MAX,
        "graph6 short form supports n <= {SHORT_MAX}"
    );
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut fill = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

/// Parses `"n\nu v\nu v..."`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums: Vec<&str> = body.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::format(here, format!("expected a vertex number, found {s:?}")))
        };
        match (n, nums.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
            _ => return Err(Error::format(here, format!("unexpected line {body:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::format(0, "missing vertex count"))?;
    Graph::new(n, &edges).map_err(|e| Error::format(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Accepts either a single graph6 token or an edge list.
pub fn parse_graph_input(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.contains(char::is_whitespace) || trimmed.chars().all(|c| c.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        parse_graph6(trimmed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        // networkx / nauty encoding of the 5-vertex graph with edges 02 04 13 34
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn malformed_inputs_are_positioned() {
        assert_eq!(
            parse_graph6("").unwrap_err(),
            Error::format(0, "empty graph6 string")
        );
        assert!(matches!(
            parse_graph6(" _"),
            Err(Error::Format { offset: 0, .. })
        ));
        // n = 4 needs one payload byte
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Format { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Error::Format { offset: 2, .. })
        ));
        // K2 with a padding bit set: 0b100001 + 63
        assert!(matches!(
            parse_graph6("A`"),
            Err(Error::Format { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("B\x7f"),
            Err(Error::Format { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("~?"),
            Err(Error::Format { offset: 0, .. })
        ));
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("4\n0 1\n1 2\n# tail\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3\n0 5\n").is_err());
        assert!(matches!(
            parse_edge_list("3\n0 x\n"),
            Err(Error::Format { offset: 2, .. })
        ));
        assert_eq!(parse_graph_input("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph_input("2\n0 1").unwrap(), Graph::complete(2));
    }
}
