//! Short-form graph6 (`n <= 62`).
//!
//! The header byte is `n + 63`. The body packs the upper triangle column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte with the
//! most significant bit first, each byte offset by 63. Unused trailing bits
//! must be zero.

use super::ParseError;
use crate::graph::{pair_count, Graph};

pub const MAX_GRAPH6_N: usize = 62;

const OFFSET: u8 = 63;

fn body_len(n: usize) -> usize {
    pair_count(n).div_ceil(6)
}

fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.as_bytes();
    if let Some((pos, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=126).contains(&b))
    {
        return Err(ParseError::Malformed { pos, byte });
    }
    let Some((&header, body)) = bytes.split_first() else {
        return Err(ParseError::Length {
            expected: 1,
            found: 0,
        });
    };
    let n = (header - OFFSET) as usize;
    if n > MAX_GRAPH6_N {
        // 126 introduces the long forms
        return Err(ParseError::UnsupportedSize(n));
    }
    if n == 0 {
        return Err(ParseError::Graph(crate::GraphError::EmptyDomain));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(ParseError::Length {
            expected: expected + 1,
            found: bytes.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let total = pair_count(n);
    if (total..expected * 6).any(bit) {
        return Err(ParseError::Padding);
    }
    let edges: Vec<_> = column_pairs(n)
        .enumerate()
        .filter(|&(k, _)| bit(k))
        .map(|(_, p)| p)
        .collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn encode_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(ParseError::UnsupportedSize(n));
    }
    let mut body = vec![0u8; body_len(n)];
    for (k, (u, v)) in column_pairs(n).enumerate() {
        if g.has_edge(u, v) {
            body[k / 6] |= 1 << (5 - k % 6);
        }
    }
    let mut out = String::with_capacity(body.len() + 1);
    out.push((n as u8 + OFFSET) as char);
    out.extend(body.into_iter().map(|b| (b + OFFSET) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};

    #[test]
    fn parse_examples() {
        let k4 = generate_family(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        let p4 = generate_family(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(parse_graph6("Ch").unwrap(), p4);
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn encode_examples() {
        let k4 = generate_family(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(encode_graph6(&k4).unwrap(), "C~");
        let p4 = generate_family(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(encode_graph6(&p4).unwrap(), "Ch");
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn known_code_from_another_encoder() {
        // five vertices, edges ac ae bd de
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_graph6("C~ "),
            Err(ParseError::Malformed { pos: 2, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(ParseError::Length {
                expected: 2,
                found: 3
            })
        );
        assert!(matches!(parse_graph6("C"), Err(ParseError::Length { .. })));
        assert!(matches!(parse_graph6(""), Err(ParseError::Length { .. })));
        // n = 2 has one meaningful bit; '@' sets the second one
        assert_eq!(parse_graph6("A@"), Err(ParseError::Padding));
        assert_eq!(parse_graph6("~??"), Err(ParseError::UnsupportedSize(63)));
        assert!(matches!(parse_graph6("?"), Err(ParseError::Graph(_))));
        let big = Graph::empty(63).unwrap();
        assert_eq!(encode_graph6(&big), Err(ParseError::UnsupportedSize(63)));
    }

    #[test]
    fn largest_short_form() {
        let g = generate_family(&FamilySpec::Cycle { n: 62 }).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert_eq!(s.len(), 1 + pair_count(62).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
