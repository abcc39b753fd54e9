//! Immutable simple undirected graphs backed by per-vertex adjacency bitsets.
//!
//! Vertices are the contiguous labels `0..n`. Every constructor in this module
//! keeps the adjacency relation symmetric and loop-free, so the rest of the
//! crate can rely on those properties without re-checking them.

use std::fmt;

use crate::error::{GraphError, Result};

const WORD_BITS: usize = 64;

/// A finite simple graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from a list of vertex pairs. Duplicate pairs (in either
    /// orientation) are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::EmptyDomain);
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Self {
            n,
            words,
            rows: vec![0; n * words],
            edge_count: 0,
        })
    }

    /// Builds a graph by asking `adjacent(u, v)` for every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.insert(u, v);
                }
            }
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.set_bit(u, v, true);
            self.set_bit(v, u, true);
            self.edge_count += 1;
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.set_bit(u, v, false);
            self.set_bit(v, u, false);
            self.edge_count -= 1;
        }
    }

    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let idx = u * self.words + v / WORD_BITS;
        let mask = 1u64 << (v % WORD_BITS);
        if on {
            self.rows[idx] |= mask;
        } else {
            self.rows[idx] &= !mask;
        }
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `m`.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of non-adjacent unordered pairs, `m̄ = C(n,2) - m`.
    pub fn coedge_count(&self) -> usize {
        pair_count(self.n) - self.edge_count
    }

    /// Panics if either vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Neighbours of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    /// All unordered pairs `u < v` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    /// Edges as pairs `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(u, v)| self.has_edge(u, v)).collect()
    }

    /// Non-adjacent pairs `u < v`, lexicographic order. Length is `m̄`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        let tail_bits = self.n % WORD_BITS;
        for u in 0..self.n {
            let row = &mut out.rows[u * self.words..(u + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail_bits != 0 {
                row[self.words - 1] &= (1u64 << tail_bits) - 1;
            }
            row[u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
        }
        out.edge_count = self.coedge_count();
        out
    }

    /// Copy of the graph with the pair `{u, v}` toggled (edge removed if present,
    /// added otherwise).
    pub fn with_pair_toggled(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut out = self.clone();
        if out.has_edge(u, v) {
            out.remove(u, v);
        } else {
            out.insert(u, v);
        }
        Ok(out)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Degree summary of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub edge_count: usize,
    pub coedge_count: usize,
    pub is_regular: bool,
}

impl DegreeStats {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        Self {
            max_degree,
            min_degree,
            edge_count: g.edge_count(),
            coedge_count: g.coedge_count(),
            is_regular: max_degree == min_degree,
            degrees,
        }
    }
}

/// Disjoint union. Vertices of `g2` are relabelled `v + g1.n()`.
pub fn graph_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    Graph::from_fn(n1 + g2.n(), |u, v| match (u < n1, v < n1) {
        (true, true) => g1.has_edge(u, v),
        (false, false) => g2.has_edge(u - n1, v - n1),
        _ => false,
    })
    .expect("union of non-empty graphs is non-empty")
}

/// Join (sum): the disjoint union plus every edge between the two parts.
pub fn graph_join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    Graph::from_fn(n1 + g2.n(), |u, v| match (u < n1, v < n1) {
        (true, true) => g1.has_edge(u, v),
        (false, false) => g2.has_edge(u - n1, v - n1),
        _ => true,
    })
    .expect("join of non-empty graphs is non-empty")
}

/// Cartesian product. Vertex `(u1, u2)` is flattened to `u1 * n2 + u2`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    Graph::from_fn(g1.n() * n2, |a, b| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        (a1 == b1 && g2.has_edge(a2, b2)) || (a2 == b2 && g1.has_edge(a1, b1))
    })
    .expect("product of non-empty graphs is non-empty")
}

/// Composition (lexicographic product) `g1[g2]`, flattened like
/// [`cartesian_product`].
pub fn composition(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    Graph::from_fn(g1.n() * n2, |a, b| {
        let (a1, a2) = (a / n2, a % n2);
        let (b1, b2) = (b / n2, b % n2);
        (a1 != b1 && g1.has_edge(a1, b1)) || (a1 == b1 && g2.has_edge(a2, b2))
    })
    .expect("composition of non-empty graphs is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_path() {
        let g = path4();
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn build_edgeless_and_duplicates() {
        assert_eq!(Graph::new(3, &[]).unwrap().edge_count(), 0);
        let g = Graph::new(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degrees(), vec![1, 1, 0]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(0, &[]), Err(GraphError::EmptyDomain));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn complement_examples() {
        let k4c = complete(4).complement();
        assert_eq!(k4c.edge_count(), 0);
        assert_eq!(k4c, Graph::empty(4).unwrap());
        assert_eq!(path4().complement().complement(), path4());
        let c5c = cycle(5).complement();
        assert_eq!(c5c.degrees(), vec![2; 5]);
        assert_eq!(c5c.edge_count(), 5);
    }

    #[test]
    fn complement_masks_tail_bits_beyond_one_word() {
        let g = Graph::new(70, &[(0, 69), (3, 64)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), pair_count(70) - 2);
        assert!(!c.has_edge(0, 69));
        assert!(c.has_edge(0, 68));
        assert_eq!(c.degree(69), 68);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_stats_examples() {
        let s = path4().degree_stats();
        assert_eq!(
            s,
            DegreeStats {
                degrees: vec![1, 2, 2, 1],
                max_degree: 2,
                min_degree: 1,
                edge_count: 3,
                coedge_count: 3,
                is_regular: false,
            }
        );
        let s = cycle(5).degree_stats();
        assert!(s.is_regular);
        assert_eq!(
            (s.max_degree, s.min_degree, s.edge_count, s.coedge_count),
            (2, 2, 5, 5)
        );
        let s = complete(4).degree_stats();
        assert_eq!(
            (s.max_degree, s.min_degree, s.edge_count, s.coedge_count),
            (3, 3, 6, 0)
        );
    }

    #[test]
    fn non_edge_examples() {
        assert!(complete(3).non_edges().is_empty());
        assert_eq!(path4().non_edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(
            Graph::empty(3).unwrap().non_edges(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    #[test]
    fn neighbors_are_sorted() {
        let g = Graph::new(5, &[(2, 4), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 3, 4]);
    }

    #[test]
    fn union_examples() {
        let k2 = complete(2);
        let u = graph_union(&k2, &k2);
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        assert_eq!(u.degrees(), vec![1, 1, 1, 1]);
        let u = graph_union(&complete(3), &complete(1));
        assert_eq!(u.degrees(), vec![2, 2, 2, 0]);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let u = graph_union(&k2, &p3);
        assert_eq!((u.n(), u.edge_count()), (5, 3));
    }

    #[test]
    fn join_examples() {
        let e1 = Graph::empty(1).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(graph_join(&e1, &e3), star);
        assert_eq!(graph_join(&complete(2), &complete(1)), complete(3));
        let e2 = Graph::empty(2).unwrap();
        let c4 = graph_join(&e2, &e2);
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert_eq!(c4.edge_count(), 4);
        // K_{2,2} with parts {0,1},{2,3}
        assert!(!c4.has_edge(0, 1) && !c4.has_edge(2, 3));
    }

    #[test]
    fn cartesian_examples() {
        let sq = cartesian_product(&complete(2), &complete(2));
        assert_eq!((sq.n(), sq.edge_count()), (4, 4));
        assert_eq!(sq.degrees(), vec![2; 4]);
        let t = cartesian_product(&cycle(3), &cycle(3));
        assert_eq!((t.n(), t.edge_count()), (9, 18));
        assert!(t.degree_stats().is_regular && t.degree(0) == 4);
        let p2 = complete(2);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let ladder = cartesian_product(&p2, &p3);
        assert_eq!((ladder.n(), ladder.edge_count()), (6, 7));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(composition(&cycle(3), &complete(2)), complete(6));
        let f = composition(&cycle(4), &complete(2));
        assert_eq!((f.n(), f.edge_count()), (8, 20));
        assert_eq!(f.degrees(), vec![5; 8]);
        let g = path4();
        assert_eq!(composition(&complete(1), &g), g);
    }

    #[test]
    fn toggle_pair() {
        let g = path4();
        let h = g.with_pair_toggled(1, 2).unwrap();
        assert_eq!(h.edge_count(), 2);
        let h = g.with_pair_toggled(0, 3).unwrap();
        assert_eq!(h, cycle(4));
        assert!(g.with_pair_toggled(0, 0).is_err());
    }
}
