//! Plain edge lists:
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n` header must come before any edge so isolated vertices can be
//! represented. Vertices are 0-based.

use super::ParseError;
use crate::graph::Graph;

fn parse_int(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::Format(format!("not a vertex index: {tok:?}")).at_line(line))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (n, toks.as_slice()) {
            (None, ["n", count]) => {
                let count = parse_int(count, line)?;
                Graph::empty(count).map_err(|e| ParseError::from(e).at_line(line))?;
                n = Some(count);
            }
            (None, _) => return Err(ParseError::MissingHeader.at_line(line)),
            (Some(n), [u, v]) => {
                let (u, v) = (parse_int(u, line)?, parse_int(v, line)?);
                // validate each pair as it is read so errors point at the line
                Graph::new(n, &[(u, v)]).map_err(|e| ParseError::from(e).at_line(line))?;
                edges.push((u, v));
            }
            (Some(_), _) => {
                return Err(
                    ParseError::Format(format!("expected `u v`, got {content:?}")).at_line(line),
                )
            }
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(n, &edges)?)
}
