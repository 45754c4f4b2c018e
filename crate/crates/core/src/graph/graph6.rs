use super::{Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// newline are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(i) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(base + i, format!("byte {:#04x} is outside the graph6 range", body[i])));
    }
    let (n, header_len) = match body {
        [] => return Err(parse_err(base, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(base, "truncated 36-bit order"));
            }
            (rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(base, "truncated 18-bit order"));
            }
            (rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::Capacity { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        return Err(parse_err(
            base + header_len + data.len().min(need),
            format!("expected {need} data bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if let Some(&last) = data.last() {
        let pad = need * 6 - bits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(parse_err(base + header_len + need - 1, "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes without header or newline.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.adjacent(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hypercube};

    #[test]
    fn known_codes() {
        assert_eq!(graph6_encode(&complete(3).unwrap()), "Bw");
        assert_eq!(graph6_encode(&cycle(5).unwrap()), "Dhc");
        assert_eq!(graph6_decode("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(graph6_decode(">>graph6<<Bw\n").unwrap().edge_count(), 3);
    }

    #[test]
    fn round_trip_large() {
        let g = complete(70).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        let q = hypercube(7).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&q)).unwrap(), q);
    }

    #[test]
    fn malformed() {
        assert!(matches!(graph6_decode(""), Err(GraphError::Graph6 { offset: 0, .. })));
        assert!(matches!(graph6_decode("Bx"), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(graph6_decode("B"), Err(GraphError::Graph6 { .. })));
        assert!(matches!(graph6_decode("Bw?"), Err(GraphError::Graph6 { .. })));
        assert!(matches!(graph6_decode("B\x07"), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(graph6_decode("~?A@"), Err(GraphError::Capacity { n: 129 })));
    }
}
