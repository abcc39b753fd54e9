//! Degree-based topological indices of simple graphs, centred on the Sombor
//! coindex, together with an auditor that checks published bounds and closed
//! forms against exhaustive evaluation on small graphs.
//!
//! ```
//! use sombor_core::{generate_family, sombor_coindex, FamilySpec};
//!
//! let c5 = generate_family(&FamilySpec::Cycle { n: 5 }).unwrap();
//! assert!((sombor_coindex(&c5) - 10.0 * 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod audit;
pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod invariants;
pub mod io;

pub use audit::{
    audit_graph, audit_universe, find_counterexamples, AuditReport, BoundRecord, GraphOperation,
    TheoremId, TheoremTally, UniverseAudit,
};
pub use closed_forms::{
    closed_sombor_coindex, closed_sombor_index, regular_coindex, ClosedFormResult, Variant,
};
pub use enumerate::{enumerate_labeled_graphs, LabeledGraphs, MAX_ENUMERATION_N};
pub use error::GraphError;
pub use family::{generate_family, FamilySpec};
pub use graph::{cartesian_product, composition, graph_join, graph_union, DegreeStats, Graph};
pub use invariants::{
    compute_all, first_zagreb, first_zagreb_coindex, forgotten_coindex, forgotten_index,
    general_first_zagreb, second_zagreb, second_zagreb_coindex, sombor_coindex, sombor_index,
    IndexVector,
};
pub use io::graph6::{encode_graph6, parse_graph6};
pub use io::report::{write_reports, OutputFormat, ReportRecord};
pub use io::{edge_list::parse_edge_list, GraphDocument, ParseError};

/// Builds a graph from a vertex count and a list of pairs.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}

/// Non-adjacent pairs of `g` in lexicographic order.
pub fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.non_edges()
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    g.degree_stats()
}
