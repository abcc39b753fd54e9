//! Labeled enumeration of every simple graph on `n` vertices.
//!
//! Graph number `k` has the pair with lexicographic index `i` as an edge iff
//! bit `i` of `k` is set, so `0` is the edgeless graph and `2^C(n,2) - 1` is
//! `K_n`. Counter ranges can be consumed independently.

use std::ops::Range;

use crate::error::{GraphError, Result};
use crate::graph::{pair_count, Graph};

/// Largest vertex count the enumerator accepts (`2^21` graphs).
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self> {
        let total = Self::count(n)?;
        Self::range(n, 0..total)
    }

    /// Enumerates only the counters in `range` (clamped to the valid range).
    pub fn range(n: usize, range: Range<u64>) -> Result<Self> {
        let total = Self::count(n)?;
        let pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Ok(Self {
            n,
            pairs,
            next: range.start.min(total),
            end: range.end.min(total),
        })
    }

    /// `2^C(n,2)`.
    pub fn count(n: usize) -> Result<u64> {
        if !(1..=MAX_ENUMERATION_N).contains(&n) {
            return Err(GraphError::EnumerationCap(n));
        }
        Ok(1u64 << pair_count(n))
    }

    pub fn graph_at(&self, code: u64) -> Graph {
        let mut edges = Vec::with_capacity(self.pairs.len());
        for (i, &p) in self.pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                edges.push(p);
            }
        }
        Graph::new(self.n, &edges).expect("enumerated pairs are valid")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph_at(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(LabeledGraphs::count(7).unwrap(), 2_097_152);
    }

    #[test]
    fn two_vertices() {
        let gs: Vec<_> = enumerate_labeled_graphs(2).unwrap().collect();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].edge_count(), 0);
        assert_eq!(gs[1].edge_count(), 1);
    }

    #[test]
    fn every_graph_exactly_once() {
        let gs: HashSet<_> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(gs.len(), 64);
    }

    #[test]
    fn cap() {
        assert_eq!(
            enumerate_labeled_graphs(0).unwrap_err(),
            GraphError::EnumerationCap(0)
        );
        assert_eq!(
            enumerate_labeled_graphs(8).unwrap_err(),
            GraphError::EnumerationCap(8)
        );
    }

    #[test]
    fn ranges_partition_the_stream() {
        let all: Vec<_> = enumerate_labeled_graphs(4).unwrap().collect();
        let mut parts = Vec::new();
        for start in (0..64).step_by(10) {
            parts.extend(LabeledGraphs::range(4, start..start + 10).unwrap());
        }
        assert_eq!(parts, all);
    }
}
