//! Evaluates both sides of every published bound on concrete graphs.
//!
//! Each evaluator produces a [`BoundRecord`] holding the bounded quantity,
//! the bound(s), and whether the inequality and its equality cases were
//! observed. Statements are evaluated exactly as printed; a failing bound is
//! reported as a violation, never repaired.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::enumerate::LabeledGraphs;
use crate::error::{GraphError, Result};
use crate::graph::{
    cartesian_product, composition, graph_join, graph_union, pair_count, DegreeStats, Graph,
};
use crate::invariants::{compute_all, sombor_coindex, IndexVector};
use crate::io::graph6::encode_graph6;
use crate::io::report::{round12, round12_opt};

/// Relative slack used for every inequality and equality check.
pub const REL_TOLERANCE: f64 = 1e-9;

/// Float guard band for the strict edge-monotonicity comparisons.
pub const MONOTONE_GUARD: f64 = 1e-12;

/// `1e-9 * max(1, |value|, |bound|)`.
pub fn tolerance(value: f64, bound: f64) -> f64 {
    REL_TOLERANCE * 1f64.max(value.abs()).max(bound.abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    DegreeBounds,
    M1barBound,
    M1barCorollary,
    SoPlusCoso,
    SobarComplementPair,
    SelfcompSum,
    CsFbarUpper,
    PsFbarLower,
    PsM1barLower,
    M2barUpper,
    UnionBounds,
    JoinBounds,
    CartesianBounds,
    CompositionBounds,
    EdgeMonotone,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        Self::DegreeBounds,
        Self::M1barBound,
        Self::M1barCorollary,
        Self::SoPlusCoso,
        Self::SobarComplementPair,
        Self::SelfcompSum,
        Self::CsFbarUpper,
        Self::PsFbarLower,
        Self::PsM1barLower,
        Self::M2barUpper,
        Self::UnionBounds,
        Self::JoinBounds,
        Self::CartesianBounds,
        Self::CompositionBounds,
        Self::EdgeMonotone,
    ];

    /// The inequality theorems that take one graph; what [`audit_graph`] runs.
    pub const SINGLE_GRAPH: [TheoremId; 10] = [
        Self::DegreeBounds,
        Self::M1barBound,
        Self::M1barCorollary,
        Self::SoPlusCoso,
        Self::SobarComplementPair,
        Self::SelfcompSum,
        Self::CsFbarUpper,
        Self::PsFbarLower,
        Self::PsM1barLower,
        Self::M2barUpper,
    ];

    pub const GRAPH_OPERATIONS: [TheoremId; 4] = [
        Self::UnionBounds,
        Self::JoinBounds,
        Self::CartesianBounds,
        Self::CompositionBounds,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::DegreeBounds => "T_DEGREE_BOUNDS",
            Self::M1barBound => "T_M1BAR_BOUND",
            Self::M1barCorollary => "T_M1BAR_COROLLARY",
            Self::SoPlusCoso => "T_SO_PLUS_COSO",
            Self::SobarComplementPair => "T_SOBAR_COMPLEMENT_PAIR",
            Self::SelfcompSum => "T_SELFCOMP_SUM",
            Self::CsFbarUpper => "T_CS_FBAR_UPPER",
            Self::PsFbarLower => "T_PS_FBAR_LOWER",
            Self::PsM1barLower => "T_PS_M1BAR_LOWER",
            Self::M2barUpper => "T_M2BAR_UPPER",
            Self::UnionBounds => "T_UNION_BOUNDS",
            Self::JoinBounds => "T_JOIN_BOUNDS",
            Self::CartesianBounds => "T_CARTESIAN_BOUNDS",
            Self::CompositionBounds => "T_COMPOSITION_BOUNDS",
            Self::EdgeMonotone => "R_EDGE_MONOTONE",
        }
    }

    pub fn is_graph_operation(&self) -> bool {
        Self::GRAPH_OPERATIONS.contains(self)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| GraphError::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One theorem evaluated on one graph (or graph pair).
///
/// For applicable records `holds` is true iff `lower <= value + tol` and
/// `value <= upper + tol` (absent bounds are ignored), with
/// `tol = 1e-9 * max(1, |value|, |bound|)`. Equality flags use the same
/// tolerance. The edge-monotonicity record is strict instead: see
/// [`eval_edge_monotonicity`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub theorem: TheoremId,
    #[serde(serialize_with = "round12_opt")]
    pub lower: Option<f64>,
    #[serde(serialize_with = "round12")]
    pub value: f64,
    #[serde(serialize_with = "round12_opt")]
    pub upper: Option<f64>,
    pub applicable: bool,
    pub not_applicable_reason: String,
    pub holds: Option<bool>,
    pub equality_lower: Option<bool>,
    pub equality_upper: Option<bool>,
    pub is_regular_input: bool,
    #[serde(serialize_with = "round12_opt")]
    pub gap_lower: Option<f64>,
    #[serde(serialize_with = "round12_opt")]
    pub gap_upper: Option<f64>,
}

impl BoundRecord {
    pub fn evaluate(
        theorem: TheoremId,
        lower: Option<f64>,
        value: f64,
        upper: Option<f64>,
        is_regular_input: bool,
    ) -> Self {
        let lower_ok = lower.is_none_or(|lo| lo <= value + tolerance(value, lo));
        let upper_ok = upper.is_none_or(|hi| value <= hi + tolerance(value, hi));
        Self {
            theorem,
            lower,
            value,
            upper,
            applicable: true,
            not_applicable_reason: String::new(),
            holds: Some(lower_ok && upper_ok),
            equality_lower: lower.map(|lo| (value - lo).abs() <= tolerance(value, lo)),
            equality_upper: upper.map(|hi| (hi - value).abs() <= tolerance(value, hi)),
            is_regular_input,
            gap_lower: lower.map(|lo| value - lo),
            gap_upper: upper.map(|hi| hi - value),
        }
    }

    pub fn not_applicable(
        theorem: TheoremId,
        value: f64,
        reason: impl Into<String>,
        is_regular_input: bool,
    ) -> Self {
        Self {
            theorem,
            lower: None,
            value,
            upper: None,
            applicable: false,
            not_applicable_reason: reason.into(),
            holds: None,
            equality_lower: None,
            equality_upper: None,
            is_regular_input,
            gap_lower: None,
            gap_upper: None,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && self.holds == Some(false)
    }

    /// True when any present bound is attained.
    pub fn has_equality(&self) -> bool {
        self.equality_lower == Some(true) || self.equality_upper == Some(true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    /// graph6 encoding of the audited graph.
    pub graph_id: String,
    pub records: Vec<BoundRecord>,
    pub violations: Vec<BoundRecord>,
}

impl AuditReport {
    pub fn new(g: &Graph, records: Vec<BoundRecord>) -> Self {
        let violations = records
            .iter()
            .filter(|r| r.is_violation())
            .cloned()
            .collect();
        Self {
            graph_id: graph_id(g),
            records,
            violations,
        }
    }
}

/// graph6 code, or `n=..;m=..` for graphs too large for the short form.
pub fn graph_id(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("n={};m={}", g.n(), g.edge_count()))
}

/// Everything the single-graph evaluators need, computed once.
#[derive(Debug, Clone)]
pub struct Profile {
    pub n: usize,
    pub stats: DegreeStats,
    pub indices: IndexVector,
    /// Indices of the complement graph.
    pub complement: IndexVector,
}

impl Profile {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.n(),
            stats: g.degree_stats(),
            indices: compute_all(g),
            complement: compute_all(&g.complement()),
        }
    }

    fn delta(&self) -> f64 {
        self.stats.min_degree as f64
    }

    fn big_delta(&self) -> f64 {
        self.stats.max_degree as f64
    }

    fn coedges(&self) -> f64 {
        self.stats.coedge_count as f64
    }

    fn regular(&self) -> bool {
        self.stats.is_regular
    }
}

const ZERO_MIN_DEGREE: &str = "minimum degree is 0";

fn degree_bounds(p: &Profile) -> BoundRecord {
    let n = p.n as f64;
    let lower = p.delta() * n * (n - 1.0 - p.big_delta()) / SQRT_2;
    let upper = p.big_delta() * n * (n - 1.0 - p.delta()) / SQRT_2;
    BoundRecord::evaluate(
        TheoremId::DegreeBounds,
        Some(lower),
        p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn m1bar_bound(p: &Profile) -> BoundRecord {
    let upper = p.indices.m1_coindex - (2.0 - SQRT_2) * p.delta() * p.coedges();
    BoundRecord::evaluate(
        TheoremId::M1barBound,
        None,
        p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn m1bar_corollary(p: &Profile) -> BoundRecord {
    let n = p.n as f64;
    let m = p.stats.edge_count as f64;
    let upper = 2.0 * m * (n - 1.0)
        - p.indices.m1
        - (1.0 - 1.0 / SQRT_2) * (n * (n - 1.0) - 2.0 * m) * p.delta();
    BoundRecord::evaluate(
        TheoremId::M1barCorollary,
        None,
        p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn so_plus_coso(p: &Profile) -> BoundRecord {
    let n = p.n as f64;
    let upper = n * (n - 1.0) * p.big_delta() / SQRT_2;
    BoundRecord::evaluate(
        TheoremId::SoPlusCoso,
        None,
        p.indices.so + p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn sobar_complement_pair(p: &Profile) -> BoundRecord {
    let n = p.n as f64;
    let upper = p.coedges() * (n - 1.0 + p.big_delta() - p.delta()) * SQRT_2;
    BoundRecord::evaluate(
        TheoremId::SobarComplementPair,
        None,
        p.complement.so + p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn selfcomp_sum(p: &Profile) -> BoundRecord {
    let pairs = pair_count(p.n) as f64;
    let upper = 2.0 * p.indices.m1_coindex - (2.0 - SQRT_2) * p.delta() * pairs;
    BoundRecord::evaluate(
        TheoremId::SelfcompSum,
        None,
        p.indices.so_coindex + p.complement.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn cs_fbar_upper(p: &Profile) -> BoundRecord {
    let upper = (p.coedges() * p.indices.f_coindex).sqrt();
    BoundRecord::evaluate(
        TheoremId::CsFbarUpper,
        None,
        p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

fn ps_fbar_lower(p: &Profile) -> BoundRecord {
    let (d, big_d) = (p.delta(), p.big_delta());
    if d == 0.0 {
        return BoundRecord::not_applicable(
            TheoremId::PsFbarLower,
            p.indices.so_coindex,
            ZERO_MIN_DEGREE,
            p.regular(),
        );
    }
    let scaled = 0.5 * (d / big_d + big_d / d) * p.indices.so_coindex;
    let lower = (p.coedges() * p.indices.f_coindex).sqrt();
    BoundRecord::evaluate(
        TheoremId::PsFbarLower,
        Some(lower),
        scaled,
        None,
        p.regular(),
    )
}

fn ps_m1bar_lower(p: &Profile) -> BoundRecord {
    let (d, big_d) = (p.delta(), p.big_delta());
    if d == 0.0 {
        return BoundRecord::not_applicable(
            TheoremId::PsM1barLower,
            p.indices.so_coindex,
            ZERO_MIN_DEGREE,
            p.regular(),
        );
    }
    let scaled = (1.0 + big_d / d) * p.indices.so_coindex;
    let lower = 2.0 * (p.coedges() * big_d * p.indices.m1_coindex).sqrt();
    BoundRecord::evaluate(
        TheoremId::PsM1barLower,
        Some(lower),
        scaled,
        None,
        p.regular(),
    )
}

fn m2bar_upper(p: &Profile) -> BoundRecord {
    let (d, big_d) = (p.delta(), p.big_delta());
    if d == 0.0 {
        return BoundRecord::not_applicable(
            TheoremId::M2barUpper,
            p.indices.so_coindex,
            ZERO_MIN_DEGREE,
            p.regular(),
        );
    }
    let upper = ((d / big_d + big_d / d) * p.coedges() * p.indices.m2_coindex).sqrt();
    BoundRecord::evaluate(
        TheoremId::M2barUpper,
        None,
        p.indices.so_coindex,
        Some(upper),
        p.regular(),
    )
}

/// Evaluates a single-graph inequality theorem against a precomputed profile.
/// Edge monotonicity needs the graph itself and is rejected here.
pub fn evaluate_profile(theorem: TheoremId, p: &Profile) -> Result<BoundRecord> {
    Ok(match theorem {
        TheoremId::DegreeBounds => degree_bounds(p),
        TheoremId::M1barBound => m1bar_bound(p),
        TheoremId::M1barCorollary => m1bar_corollary(p),
        TheoremId::SoPlusCoso => so_plus_coso(p),
        TheoremId::SobarComplementPair => sobar_complement_pair(p),
        TheoremId::SelfcompSum => selfcomp_sum(p),
        TheoremId::CsFbarUpper => cs_fbar_upper(p),
        TheoremId::PsFbarLower => ps_fbar_lower(p),
        TheoremId::PsM1barLower => ps_m1bar_lower(p),
        TheoremId::M2barUpper => m2bar_upper(p),
        TheoremId::EdgeMonotone => {
            return Err(GraphError::InvalidParameter(
                "R_EDGE_MONOTONE is evaluated on the graph, not a profile".into(),
            ))
        }
        t => return Err(GraphError::NotSingleGraph(t.as_str())),
    })
}

/// Evaluates any single-graph theorem, including edge monotonicity.
pub fn evaluate(theorem: TheoremId, g: &Graph) -> Result<BoundRecord> {
    match theorem {
        TheoremId::EdgeMonotone => Ok(eval_edge_monotonicity(g)),
        t => evaluate_profile(t, &Profile::of(g)),
    }
}

/// `δn(n-1-Δ)/√2 <= S̄O <= Δn(n-1-δ)/√2`.
pub fn eval_degree_bounds(g: &Graph) -> BoundRecord {
    degree_bounds(&Profile::of(g))
}

/// `S̄O <= M̄1 - (2-√2)δm̄`.
pub fn eval_m1bar_bound(g: &Graph) -> BoundRecord {
    m1bar_bound(&Profile::of(g))
}

/// `S̄O <= 2m(n-1) - M1 - (1-1/√2)[n(n-1)-2m]δ`.
pub fn eval_m1bar_corollary(g: &Graph) -> BoundRecord {
    m1bar_corollary(&Profile::of(g))
}

/// `SO + S̄O <= n(n-1)Δ/√2`.
pub fn eval_so_plus_coso(g: &Graph) -> BoundRecord {
    so_plus_coso(&Profile::of(g))
}

/// `SO(Ḡ) + S̄O(G) <= m̄(n-1+Δ-δ)√2`.
pub fn eval_sobar_complement_pair(g: &Graph) -> BoundRecord {
    sobar_complement_pair(&Profile::of(g))
}

/// `S̄O(G) + S̄O(Ḡ) <= 2M̄1(G) - (2-√2)δC(n,2)`, evaluated as printed.
/// Complete graphs (among others) violate it.
pub fn eval_selfcomp_sum(g: &Graph) -> BoundRecord {
    selfcomp_sum(&Profile::of(g))
}

/// `S̄O <= sqrt(m̄F̄)`.
pub fn eval_cs_fbar_upper(g: &Graph) -> BoundRecord {
    cs_fbar_upper(&Profile::of(g))
}

/// `sqrt(m̄F̄) <= ½(δ/Δ+Δ/δ)S̄O`; the record's value is the right-hand side.
pub fn eval_ps_fbar_lower(g: &Graph) -> BoundRecord {
    ps_fbar_lower(&Profile::of(g))
}

/// `2sqrt(m̄ΔM̄1) <= (1+Δ/δ)S̄O`; the record's value is the right-hand side.
pub fn eval_ps_m1bar_lower(g: &Graph) -> BoundRecord {
    ps_m1bar_lower(&Profile::of(g))
}

/// `S̄O <= sqrt((δ/Δ+Δ/δ)m̄M̄2)`.
pub fn eval_m2bar_upper(g: &Graph) -> BoundRecord {
    m2bar_upper(&Profile::of(g))
}

/// The four graph operations with a published coindex bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphOperation {
    Union,
    Join,
    Cartesian,
    Composition,
}

impl GraphOperation {
    pub const ALL: [GraphOperation; 4] =
        [Self::Union, Self::Join, Self::Cartesian, Self::Composition];

    pub fn apply(&self, g1: &Graph, g2: &Graph) -> Graph {
        match self {
            Self::Union => graph_union(g1, g2),
            Self::Join => graph_join(g1, g2),
            Self::Cartesian => cartesian_product(g1, g2),
            Self::Composition => composition(g1, g2),
        }
    }

    pub fn theorem(&self) -> TheoremId {
        match self {
            Self::Union => TheoremId::UnionBounds,
            Self::Join => TheoremId::JoinBounds,
            Self::Cartesian => TheoremId::CartesianBounds,
            Self::Composition => TheoremId::CompositionBounds,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Union => "union",
            Self::Join => "join",
            Self::Cartesian => "cartesian",
            Self::Composition => "composition",
        }
    }

    /// Evaluates the operation's bound theorem on `(g1, g2)`.
    pub fn eval_bounds(&self, g1: &Graph, g2: &Graph) -> BoundRecord {
        match self {
            Self::Union => eval_union_bounds(g1, g2),
            Self::Join => eval_join_bounds(g1, g2),
            Self::Cartesian => eval_cartesian_bounds(g1, g2),
            Self::Composition => eval_composition_bounds(g1, g2),
        }
    }
}

impl FromStr for GraphOperation {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| GraphError::InvalidParameter(format!("unknown operation {s:?}")))
    }
}

fn both_regular(a: &DegreeStats, b: &DegreeStats) -> bool {
    a.is_regular && b.is_regular
}

fn hypot(a: usize, b: usize) -> f64 {
    (a as f64).hypot(b as f64)
}

/// `S̄O(G1)+S̄O(G2)+n1n2·sqrt(δ1²+δ2²) <= S̄O(G1∪G2) <= ... with Δ`.
pub fn eval_union_bounds(g1: &Graph, g2: &Graph) -> BoundRecord {
    let (s1, s2) = (g1.degree_stats(), g2.degree_stats());
    let base = sombor_coindex(g1) + sombor_coindex(g2);
    let cross = (g1.n() * g2.n()) as f64;
    let lower = base + cross * hypot(s1.min_degree, s2.min_degree);
    let upper = base + cross * hypot(s1.max_degree, s2.max_degree);
    let value = sombor_coindex(&graph_union(g1, g2));
    BoundRecord::evaluate(
        TheoremId::UnionBounds,
        Some(lower),
        value,
        Some(upper),
        both_regular(&s1, &s2),
    )
}

/// `√2[m̄1(δ1+n2)+m̄2(δ2+n1)] <= S̄O(G1+G2) <= ... with Δ`.
pub fn eval_join_bounds(g1: &Graph, g2: &Graph) -> BoundRecord {
    let (s1, s2) = (g1.degree_stats(), g2.degree_stats());
    let (n1, n2) = (g1.n(), g2.n());
    let side = |m_bar: usize, deg: usize, other_n: usize| (m_bar * (deg + other_n)) as f64;
    let lower = SQRT_2
        * (side(s1.coedge_count, s1.min_degree, n2) + side(s2.coedge_count, s2.min_degree, n1));
    let upper = SQRT_2
        * (side(s1.coedge_count, s1.max_degree, n2) + side(s2.coedge_count, s2.max_degree, n1));
    let value = sombor_coindex(&graph_join(g1, g2));
    BoundRecord::evaluate(
        TheoremId::JoinBounds,
        Some(lower),
        value,
        Some(upper),
        both_regular(&s1, &s2),
    )
}

/// `m̄√2(δ1+δ2) <= S̄O(G1□G2) <= m̄√2(Δ1+Δ2)` with `m̄` the product's coedge count.
pub fn eval_cartesian_bounds(g1: &Graph, g2: &Graph) -> BoundRecord {
    let (s1, s2) = (g1.degree_stats(), g2.degree_stats());
    let (n1, n2) = (g1.n(), g2.n());
    let m_bar = (pair_count(n1 * n2) - n1 * s2.edge_count - s1.edge_count * n2) as f64;
    let lower = m_bar * SQRT_2 * (s1.min_degree + s2.min_degree) as f64;
    let upper = m_bar * SQRT_2 * (s1.max_degree + s2.max_degree) as f64;
    let value = sombor_coindex(&cartesian_product(g1, g2));
    BoundRecord::evaluate(
        TheoremId::CartesianBounds,
        Some(lower),
        value,
        Some(upper),
        both_regular(&s1, &s2),
    )
}

/// `m̄√2(n2δ1+δ2) <= S̄O(G1[G2]) <= m̄√2(n2Δ1+Δ2)`.
pub fn eval_composition_bounds(g1: &Graph, g2: &Graph) -> BoundRecord {
    let (s1, s2) = (g1.degree_stats(), g2.degree_stats());
    let (n1, n2) = (g1.n(), g2.n());
    let m_bar = (pair_count(n1 * n2) - n1 * s2.edge_count - s1.edge_count * n2 * n2) as f64;
    let lower = m_bar * SQRT_2 * (n2 * s1.min_degree + s2.min_degree) as f64;
    let upper = m_bar * SQRT_2 * (n2 * s1.max_degree + s2.max_degree) as f64;
    let value = sombor_coindex(&composition(g1, g2));
    BoundRecord::evaluate(
        TheoremId::CompositionBounds,
        Some(lower),
        value,
        Some(upper),
        both_regular(&s1, &s2),
    )
}

/// Exact `S̄O(G1∪G2)` from the factors: both coindices plus the
/// `K_{n1,n2}` cross terms, with degrees taken in each factor.
pub fn union_coindex_decomposition(g1: &Graph, g2: &Graph) -> f64 {
    let (d1, d2) = (g1.degrees(), g2.degrees());
    let cross: f64 = d1
        .iter()
        .flat_map(|&a| d2.iter().map(move |&b| hypot(a, b)))
        .sum();
    sombor_coindex(g1) + sombor_coindex(g2) + cross
}

/// Exact `S̄O(G1+G2)`: only non-edges inside each factor remain, with degrees
/// shifted by the other factor's order.
pub fn join_coindex_decomposition(g1: &Graph, g2: &Graph) -> f64 {
    let part = |g: &Graph, shift: usize| -> f64 {
        let d = g.degrees();
        g.non_edges()
            .into_iter()
            .map(|(u, v)| hypot(d[u] + shift, d[v] + shift))
            .sum()
    };
    part(g1, g2.n()) + part(g2, g1.n())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modification {
    Removal,
    Addition,
}

/// A single edge toggle that did not move `S̄O` strictly in the claimed direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneFailure {
    pub pair: (usize, usize),
    pub modification: Modification,
    pub before: f64,
    pub after: f64,
}

impl MonotoneFailure {
    /// Both coindices vanish (e.g. `K2` minus its edge).
    pub fn is_degenerate(&self) -> bool {
        self.before.abs() <= MONOTONE_GUARD && self.after.abs() <= MONOTONE_GUARD
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityDetail {
    pub before: f64,
    /// Smallest `S̄O(G-e) - S̄O(G)` over edges `e`.
    pub worst_removal_margin: Option<f64>,
    /// Smallest `S̄O(G) - S̄O(G+e)` over non-edges `e`.
    pub worst_addition_margin: Option<f64>,
    pub failures: Vec<MonotoneFailure>,
}

impl MonotonicityDetail {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn removals_hold(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|f| f.modification == Modification::Removal)
    }

    pub fn additions_hold(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|f| f.modification == Modification::Addition)
    }

    /// At least one failure, and every failure is degenerate.
    pub fn is_degenerate(&self) -> bool {
        !self.failures.is_empty() && self.failures.iter().all(MonotoneFailure::is_degenerate)
    }

    pub fn worst_margin(&self) -> Option<f64> {
        match (self.worst_removal_margin, self.worst_addition_margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Toggles every vertex pair of `g` and records how `S̄O` moves.
pub fn edge_monotonicity(g: &Graph) -> MonotonicityDetail {
    let before = sombor_coindex(g);
    let mut detail = MonotonicityDetail {
        before,
        worst_removal_margin: None,
        worst_addition_margin: None,
        failures: Vec::new(),
    };
    for (u, v) in g.pairs() {
        let removal = g.has_edge(u, v);
        let after = sombor_coindex(&g.with_pair_toggled(u, v).expect("pair is in range"));
        let (margin, slot, modification) = if removal {
            (
                after - before,
                &mut detail.worst_removal_margin,
                Modification::Removal,
            )
        } else {
            (
                before - after,
                &mut detail.worst_addition_margin,
                Modification::Addition,
            )
        };
        *slot = Some(slot.map_or(margin, |w: f64| w.min(margin)));
        if margin <= MONOTONE_GUARD {
            detail.failures.push(MonotoneFailure {
                pair: (u, v),
                modification,
                before,
                after,
            });
        }
    }
    detail
}

/// Strict edge monotonicity of `S̄O`: removing any edge must raise it and
/// adding any non-edge must lower it.
///
/// `value` is the worst margin over all toggles (0 for `K1`), `lower` is 0,
/// and `holds` requires every margin to exceed [`MONOTONE_GUARD`], so a
/// zero margin is a failure with `equality_lower` set.
pub fn eval_edge_monotonicity(g: &Graph) -> BoundRecord {
    let detail = edge_monotonicity(g);
    let value = detail.worst_margin().unwrap_or(0.0);
    BoundRecord {
        theorem: TheoremId::EdgeMonotone,
        lower: Some(0.0),
        value,
        upper: None,
        applicable: true,
        not_applicable_reason: String::new(),
        holds: Some(detail.holds()),
        equality_lower: Some(value.abs() <= MONOTONE_GUARD),
        equality_upper: None,
        is_regular_input: g.degree_stats().is_regular,
        gap_lower: Some(value),
        gap_upper: None,
    }
}

/// Runs every single-graph inequality evaluator (not edge monotonicity).
pub fn audit_graph(g: &Graph) -> AuditReport {
    let profile = Profile::of(g);
    let records = TheoremId::SINGLE_GRAPH
        .iter()
        .map(|&t| evaluate_profile(t, &profile).expect("single-graph theorem"))
        .collect();
    AuditReport::new(g, records)
}

/// Per-theorem counts over an audited universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub theorem: TheoremId,
    pub checked: u64,
    pub held: u64,
    pub equality: u64,
    pub violations: u64,
    pub not_applicable: u64,
}

impl TheoremTally {
    pub fn new(theorem: TheoremId) -> Self {
        Self {
            theorem,
            checked: 0,
            held: 0,
            equality: 0,
            violations: 0,
            not_applicable: 0,
        }
    }

    pub fn add(&mut self, r: &BoundRecord) {
        self.checked += 1;
        if !r.applicable {
            self.not_applicable += 1;
            return;
        }
        if r.holds == Some(true) {
            self.held += 1;
        } else {
            self.violations += 1;
        }
        if r.has_equality() {
            self.equality += 1;
        }
    }

    fn merge(&mut self, o: &TheoremTally) {
        self.checked += o.checked;
        self.held += o.held;
        self.equality += o.equality;
        self.violations += o.violations;
        self.not_applicable += o.not_applicable;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniverseAudit {
    pub tallies: Vec<TheoremTally>,
    /// Reports in enumeration order; only violating graphs unless all
    /// reports were requested.
    pub reports: Vec<AuditReport>,
}

const CHUNK: u64 = 1 << 12;

/// Audits every labeled graph with `1..=max_n` vertices against `theorems`.
/// Work is split across threads by counter range; results are merged in
/// enumeration order.
pub fn audit_universe(
    theorems: &[TheoremId],
    max_n: usize,
    keep_all_reports: bool,
) -> Result<UniverseAudit> {
    if let Some(t) = theorems.iter().find(|t| t.is_graph_operation()) {
        return Err(GraphError::NotSingleGraph(t.as_str()));
    }
    LabeledGraphs::count(max_n)?;
    let needs_profile = theorems.iter().any(|&t| t != TheoremId::EdgeMonotone);

    let mut tallies: Vec<_> = theorems.iter().map(|&t| TheoremTally::new(t)).collect();
    let mut reports = Vec::new();
    for n in 1..=max_n {
        let total = LabeledGraphs::count(n)?;
        let chunks: Vec<_> = (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                let mut local: Vec<_> = theorems.iter().map(|&t| TheoremTally::new(t)).collect();
                let mut local_reports = Vec::new();
                let graphs =
                    LabeledGraphs::range(n, c * CHUNK..(c + 1) * CHUNK).expect("n checked above");
                for g in graphs {
                    let profile = needs_profile.then(|| Profile::of(&g));
                    let records: Vec<_> = theorems
                        .iter()
                        .map(|&t| match (t, &profile) {
                            (TheoremId::EdgeMonotone, _) => eval_edge_monotonicity(&g),
                            (t, Some(p)) => evaluate_profile(t, p).expect("single-graph theorem"),
                            (_, None) => unreachable!(),
                        })
                        .collect();
                    for (tally, r) in local.iter_mut().zip(&records) {
                        tally.add(r);
                    }
                    if keep_all_reports || records.iter().any(BoundRecord::is_violation) {
                        local_reports.push(AuditReport::new(&g, records));
                    }
                }
                (local, local_reports)
            })
            .collect();
        for (local, local_reports) in chunks {
            for (t, l) in tallies.iter_mut().zip(&local) {
                t.merge(l);
            }
            reports.extend(local_reports);
        }
    }
    Ok(UniverseAudit { tallies, reports })
}

/// Every labeled graph on `1..=max_n` vertices violating `theorem`, as
/// one-record reports in enumeration order.
pub fn find_counterexamples(theorem: TheoremId, max_n: usize) -> Result<Vec<AuditReport>> {
    Ok(audit_universe(&[theorem], max_n, false)?.reports)
}
