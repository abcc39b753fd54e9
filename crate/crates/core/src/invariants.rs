//! Degree-based indices and coindices by direct summation.
//!
//! Edge sums run over adjacent pairs, coindex sums over non-adjacent pairs,
//! and in both cases the degrees are taken in the graph itself. Sums are
//! accumulated in lexicographic pair order so results are bit-reproducible.

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::io::report::round12;

/// Every index computed for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct IndexVector {
    #[serde(serialize_with = "round12")]
    pub so: f64,
    #[serde(serialize_with = "round12")]
    pub so_coindex: f64,
    #[serde(serialize_with = "round12")]
    pub m1: f64,
    #[serde(serialize_with = "round12")]
    pub m1_coindex: f64,
    #[serde(serialize_with = "round12")]
    pub m2: f64,
    #[serde(serialize_with = "round12")]
    pub m2_coindex: f64,
    #[serde(serialize_with = "round12")]
    pub f: f64,
    #[serde(serialize_with = "round12")]
    pub f_coindex: f64,
}

/// Exact integer accumulation of the integer-valued indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntegerIndices {
    pub m1: u64,
    pub m1_coindex: u64,
    pub m2: u64,
    pub m2_coindex: u64,
    pub f: u64,
    pub f_coindex: u64,
}

#[inline]
fn radius(a: usize, b: usize) -> f64 {
    let (a, b) = (a as f64, b as f64);
    (a * a + b * b).sqrt()
}

fn pair_sum(g: &Graph, adjacent: bool, term: impl Fn(usize, usize) -> f64) -> f64 {
    let d = g.degrees();
    g.pairs()
        .filter(|&(u, v)| g.has_edge(u, v) == adjacent)
        .map(|(u, v)| term(d[u], d[v]))
        .sum()
}

/// `SO(G)`: sum over edges of `sqrt(d(u)^2 + d(v)^2)`.
pub fn sombor_index(g: &Graph) -> f64 {
    pair_sum(g, true, radius)
}

/// `S̄O(G)`: the Sombor summand over non-adjacent pairs, degrees taken in `G`.
pub fn sombor_coindex(g: &Graph) -> f64 {
    pair_sum(g, false, radius)
}

/// `M1(G)`: sum of squared degrees.
pub fn first_zagreb(g: &Graph) -> f64 {
    g.degrees().iter().map(|&d| (d * d) as f64).sum()
}

pub fn second_zagreb(g: &Graph) -> f64 {
    pair_sum(g, true, |a, b| (a * b) as f64)
}

pub fn first_zagreb_coindex(g: &Graph) -> f64 {
    pair_sum(g, false, |a, b| (a + b) as f64)
}

pub fn second_zagreb_coindex(g: &Graph) -> f64 {
    pair_sum(g, false, |a, b| (a * b) as f64)
}

/// `F(G)`: sum of cubed degrees.
pub fn forgotten_index(g: &Graph) -> f64 {
    g.degrees().iter().map(|&d| (d * d * d) as f64).sum()
}

pub fn forgotten_coindex(g: &Graph) -> f64 {
    pair_sum(g, false, |a, b| (a * a + b * b) as f64)
}

/// `M1^p(G)`: sum of `d(u)^p`. Isolated vertices make `p <= 0` undefined.
pub fn general_first_zagreb(g: &Graph, p: f64) -> Result<f64> {
    let degrees = g.degrees();
    if p <= 0.0 && degrees.contains(&0) {
        return Err(GraphError::Domain { exponent: p });
    }
    Ok(degrees.iter().map(|&d| (d as f64).powf(p)).sum())
}

/// Integer-valued indices accumulated exactly. `M1` and `F` use their edge
/// forms here, so they also serve as an independent check of the vertex forms.
pub fn integer_indices(g: &Graph) -> IntegerIndices {
    let d = g.degrees();
    let mut out = IntegerIndices::default();
    for (u, v) in g.pairs() {
        let (a, b) = (d[u] as u64, d[v] as u64);
        if g.has_edge(u, v) {
            out.m1 += a + b;
            out.m2 += a * b;
            out.f += a * a + b * b;
        } else {
            out.m1_coindex += a + b;
            out.m2_coindex += a * b;
            out.f_coindex += a * a + b * b;
        }
    }
    out
}

/// All indices in a single pass over the vertex pairs.
pub fn compute_all(g: &Graph) -> IndexVector {
    let d = g.degrees();
    let mut so = 0.0;
    let mut so_coindex = 0.0;
    for (u, v) in g.pairs() {
        let r = radius(d[u], d[v]);
        if g.has_edge(u, v) {
            so += r;
        } else {
            so_coindex += r;
        }
    }
    let ints = integer_indices(g);
    IndexVector {
        so,
        so_coindex,
        m1: ints.m1 as f64,
        m1_coindex: ints.m1_coindex as f64,
        m2: ints.m2 as f64,
        m2_coindex: ints.m2_coindex as f64,
        f: ints.f as f64,
        f_coindex: ints.f_coindex as f64,
    }
}
