//! Text formats: graph6 and edge-list input, JSON-lines and CSV reports.

pub mod edge_list;
pub mod graph6;
pub mod report;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("byte {byte:#04x} at offset {pos} is outside the graph6 range 63..=126")]
    Malformed { pos: usize, byte: u8 },

    #[error("expected {expected} bytes for the declared vertex count, found {found}")]
    Length { expected: usize, found: usize },

    #[error("nonzero padding bits")]
    Padding,

    #[error("{0} vertices needs the long graph6 form, which is not supported")]
    UnsupportedSize(usize),

    #[error("missing `n <count>` header")]
    MissingHeader,

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

impl ParseError {
    pub fn at_line(self, line: usize) -> Self {
        match self {
            e @ ParseError::AtLine { .. } => e,
            e => ParseError::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceForm {
    Graph6,
    EdgeList,
}

/// A parsed graph together with the text it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub source_form: SourceForm,
    pub source_text: String,
}

/// Parses graph6 input, one graph per non-blank line. Errors carry the
/// 1-based line number.
pub fn read_graph6_lines(
    text: &str,
) -> impl Iterator<Item = Result<GraphDocument, ParseError>> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = l.trim_end_matches('\r');
            graph6::parse_graph6(line)
                .map(|graph| GraphDocument {
                    graph,
                    source_form: SourceForm::Graph6,
                    source_text: line.to_string(),
                })
                .map_err(|e| e.at_line(i + 1))
        })
}

/// Parses a whole edge-list document as a single graph.
pub fn read_edge_list(text: &str) -> Result<GraphDocument, ParseError> {
    Ok(GraphDocument {
        graph: edge_list::parse_edge_list(text)?,
        source_form: SourceForm::EdgeList,
        source_text: text.to_string(),
    })
}
