use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use sombor_core::audit::{self, tolerance, TheoremTally};
use sombor_core::io::read_graph6_lines;
use sombor_core::io::report::{
    fmt_opt_real, fmt_real, index_cells, record_cells, round12, round12_opt, IndexRow,
    INDEX_COLUMNS, RECORD_COLUMNS,
};
use sombor_core::*;

use crate::error::CliError;
use crate::InputFormat;

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    let mut bytes = Vec::new();
    match path {
        None => io::stdin().read_to_end(&mut bytes).map(drop),
        Some(p) if p.as_os_str() == "-" => io::stdin().read_to_end(&mut bytes).map(drop),
        Some(p) => fs::read(p).map(|b| bytes = b),
    }
    .map_err(|source| CliError::Read {
        path: path.map_or_else(|| PathBuf::from("<stdin>"), Path::to_path_buf),
        source,
    })?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn input_name(path: Option<&Path>) -> String {
    match path {
        Some(p) if p.as_os_str() != "-" => p.display().to_string(),
        _ => "<stdin>".to_string(),
    }
}

/// Every graph in the input, in order. The first parse error aborts.
fn read_graphs(path: Option<&Path>, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    let text = read_input(path)?;
    let name = input_name(path);
    match format {
        InputFormat::Graph6 => read_graph6_lines(&text)
            .map(|doc| doc.map(|d| d.graph))
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::parse(name, e)),
        InputFormat::Edgelist => parse_edge_list(&text)
            .map(|g| vec![g])
            .map_err(|e| CliError::parse(name, e)),
    }
}

fn emit<R: ReportRecord>(out: &mut impl Write, rows: &[R], format: OutputFormat) -> io::Result<()> {
    out.write_all(write_reports(rows, format).as_bytes())
}

pub fn compute(
    out: &mut impl Write,
    path: Option<&Path>,
    format: InputFormat,
    output: OutputFormat,
) -> Result<bool, CliError> {
    let rows: Vec<_> = read_graphs(path, format)?
        .iter()
        .map(|g| IndexRow {
            graph: audit::graph_id(g),
            n: g.n(),
            m: g.edge_count(),
            indices: compute_all(g),
        })
        .collect();
    emit(out, &rows, output)?;
    Ok(true)
}

/// `family` output: the generated graph, its indices and the closed forms.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub indices: IndexVector,
    pub variant: Variant,
    #[serde(serialize_with = "round12_opt")]
    pub closed_so: Option<f64>,
    #[serde(serialize_with = "round12_opt")]
    pub so_diff: Option<f64>,
    #[serde(serialize_with = "round12")]
    pub closed_so_coindex: f64,
    #[serde(serialize_with = "round12")]
    pub so_coindex_diff: f64,
    pub erratum: bool,
    pub note: String,
}

impl ReportRecord for FamilyRow {
    fn csv_header() -> Vec<&'static str> {
        let mut h = vec!["family", "graph", "n", "m"];
        h.extend(INDEX_COLUMNS);
        h.extend([
            "variant",
            "closed_so",
            "so_diff",
            "closed_so_coindex",
            "so_coindex_diff",
            "erratum",
            "note",
        ]);
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![
            self.family.clone(),
            self.graph.clone(),
            self.n.to_string(),
            self.m.to_string(),
        ];
        row.extend(index_cells(&self.indices));
        row.extend([
            self.variant.to_string(),
            fmt_opt_real(self.closed_so),
            fmt_opt_real(self.so_diff),
            fmt_real(self.closed_so_coindex),
            fmt_real(self.so_coindex_diff),
            self.erratum.to_string(),
            self.note.clone(),
        ]);
        vec![row]
    }
}

fn disagrees(closed: f64, computed: f64) -> bool {
    (closed - computed).abs() > tolerance(computed, closed)
}

pub fn family(
    out: &mut impl Write,
    name: &str,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    variant: Variant,
    output: OutputFormat,
) -> Result<bool, CliError> {
    let spec = FamilySpec::from_parts(name, n, p, q)?;
    let g = generate_family(&spec)?;
    let indices = compute_all(&g);
    let closed_so = closed_sombor_index(&spec).ok();
    let closed = closed_sombor_coindex(&spec, variant)?;
    let erratum = disagrees(closed.value, indices.so_coindex)
        || closed_so.is_some_and(|c| disagrees(c, indices.so));
    if erratum {
        eprintln!(
            "ERRATUM {spec} ({variant}): closed S̄O {} vs computed {}",
            fmt_real(closed.value),
            fmt_real(indices.so_coindex)
        );
    }
    let row = FamilyRow {
        family: spec.to_string(),
        graph: audit::graph_id(&g),
        n: g.n(),
        m: g.edge_count(),
        indices,
        variant,
        closed_so,
        so_diff: closed_so.map(|c| (c - indices.so).abs()),
        closed_so_coindex: closed.value,
        so_coindex_diff: (closed.value - indices.so_coindex).abs(),
        erratum,
        note: closed.note,
    };
    emit(out, &[row], output)?;
    Ok(true)
}

pub enum Operands {
    Inline(String, String),
    Input(Option<PathBuf>),
}

/// `ops` output: the operation result and its bound record.
#[derive(Debug, Clone, Serialize)]
pub struct OpsRow {
    pub op: &'static str,
    pub g1: String,
    pub g2: String,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "round12")]
    pub so_coindex: f64,
    pub bound: BoundRecord,
}

impl ReportRecord for OpsRow {
    fn csv_header() -> Vec<&'static str> {
        let mut h = vec!["op", "g1", "g2", "graph", "n", "m", "so_coindex"];
        h.extend(RECORD_COLUMNS);
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![
            self.op.to_string(),
            self.g1.clone(),
            self.g2.clone(),
            self.graph.clone(),
            self.n.to_string(),
            self.m.to_string(),
            fmt_real(self.so_coindex),
        ];
        row.extend(record_cells(&self.bound));
        vec![row]
    }
}

pub fn ops(
    out: &mut impl Write,
    op: GraphOperation,
    operands: Operands,
    output: OutputFormat,
) -> Result<bool, CliError> {
    let (g1, g2) = match operands {
        Operands::Inline(a, b) => (
            parse_graph6(&a).map_err(|e| CliError::parse("--g1", e))?,
            parse_graph6(&b).map_err(|e| CliError::parse("--g2", e))?,
        ),
        Operands::Input(path) => {
            let graphs = read_graphs(path.as_deref(), InputFormat::Graph6)?;
            match <[Graph; 2]>::try_from(graphs) {
                Ok([a, b]) => (a, b),
                Err(v) => {
                    return Err(CliError::Usage(format!(
                        "ops needs exactly two graph6 lines, found {}",
                        v.len()
                    )))
                }
            }
        }
    };
    let result = op.apply(&g1, &g2);
    let bound = op.eval_bounds(&g1, &g2);
    let row = OpsRow {
        op: op.as_str(),
        g1: audit::graph_id(&g1),
        g2: audit::graph_id(&g2),
        graph: audit::graph_id(&result),
        n: result.n(),
        m: result.edge_count(),
        so_coindex: bound.value,
        bound,
    };
    emit(out, &[row], output)?;
    Ok(true)
}

pub struct AuditConfig {
    pub path: Option<PathBuf>,
    pub format: InputFormat,
    pub theorems: Vec<String>,
    pub enumerate_max_n: Option<usize>,
    pub all_reports: bool,
    pub output: OutputFormat,
}

fn select_theorems(ids: &[String]) -> Result<Vec<TheoremId>, CliError> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(TheoremId::SINGLE_GRAPH);
            continue;
        }
        let t: TheoremId = id.parse()?;
        if t.is_graph_operation() {
            return Err(CliError::Usage(format!(
                "{t} takes two graphs; use `sombor ops`"
            )));
        }
        out.push(t);
    }
    out.dedup();
    Ok(out)
}

fn evaluate_one(t: TheoremId, g: &Graph) -> BoundRecord {
    match t {
        TheoremId::EdgeMonotone => audit::eval_edge_monotonicity(g),
        t => audit::evaluate(t, g).expect("single-graph theorem"),
    }
}

/// Returns the number of violating records.
pub fn audit(out: &mut impl Write, cfg: &AuditConfig) -> Result<u64, CliError> {
    let theorems = select_theorems(&cfg.theorems)?;
    let (tallies, reports) = match cfg.enumerate_max_n {
        Some(max_n) => {
            let u = audit_universe(&theorems, max_n, cfg.all_reports)?;
            (u.tallies, u.reports)
        }
        None => {
            let mut tallies: Vec<_> = theorems.iter().map(|&t| TheoremTally::new(t)).collect();
            let reports: Vec<_> = read_graphs(cfg.path.as_deref(), cfg.format)?
                .iter()
                .map(|g| {
                    let records: Vec<_> = theorems.iter().map(|&t| evaluate_one(t, g)).collect();
                    for (tally, r) in tallies.iter_mut().zip(&records) {
                        tally.add(r);
                    }
                    AuditReport::new(g, records)
                })
                .collect();
            (tallies, reports)
        }
    };
    emit(out, &reports, cfg.output)?;
    for t in &tallies {
        eprintln!(
            "{} checked={} held={} equality={} violations={} not_applicable={}",
            t.theorem, t.checked, t.held, t.equality, t.violations, t.not_applicable
        );
    }
    Ok(tallies.iter().map(|t| t.violations).sum())
}

pub fn enumerate(out: &mut impl Write, n: usize) -> Result<bool, CliError> {
    for g in enumerate_labeled_graphs(n)? {
        writeln!(out, "{}", audit::graph_id(&g))?;
    }
    Ok(true)
}
