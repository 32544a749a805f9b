//! Labeled simple undirected graphs.
//!
//! Vertices are the dense labels `0..n`. Adjacency is kept twice: as sorted
//! neighbor lists for `O(degree)` iteration and as a packed bit matrix for
//! `O(1)` membership tests. Graphs are immutable once built.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] may have.
///
/// The bit matrix costs `n²/8` bytes, so this caps a single graph at 128 MiB.
/// It also bounds every degree by `2^15`, which keeps all index values far
/// inside `i128`.
pub const MAX_VERTICES: usize = 1 << 15;

/// A vertex label.
pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
}

/// An edge written with its smaller endpoint first.
///
/// The derived ordering is lexicographic on `(u, v)`, which fixes the label of
/// every edge-vertex in a transformation graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeLabel {
    u: Vertex,
    v: Vertex,
}

impl EdgeLabel {
    /// Canonicalizes `{a, b}`. Returns `None` for a loop.
    pub fn new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> Vertex {
        self.u
    }

    pub fn v(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    /// True if the edges share an endpoint (and are distinct).
    pub fn is_adjacent_to(self, other: EdgeLabel) -> bool {
        self != other
            && (self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v)
    }

    pub fn is_incident_to(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Packed symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Self {
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words_per_row + b / 64] >> (b % 64) & 1 == 1
    }

    /// Sets both `(a, b)` and `(b, a)`; returns false if already present.
    #[inline]
    fn set_pair(&mut self, a: usize, b: usize) -> bool {
        let i = a * self.words_per_row + b / 64;
        let mask = 1u64 << (b % 64);
        if self.bits[i] & mask != 0 {
            return false;
        }
        self.bits[i] |= mask;
        self.bits[b * self.words_per_row + a / 64] |= 1u64 << (a % 64);
        true
    }
}

/// A labeled simple undirected graph on the vertices `0..n`.
///
/// Equality is labeled equality: same `n` and the same adjacency relation
/// under the identity labeling. It is not an isomorphism test.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    matrix: BitMatrix,
}

impl Graph {
    /// Builds the graph with exactly the given edges. Duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (a, c) in edges {
            b.add_edge(a, c)?;
        }
        Ok(b.build())
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let (a, b) = (a as usize, b as usize);
        a < self.n && b < self.n && self.matrix.get(a, b)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        let start = v as usize * self.matrix.words_per_row;
        self.matrix.bits[start..start + self.matrix.words_per_row]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// All degrees, indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n as Vertex).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let wpr = self.matrix.words_per_row;
        let row = &self.matrix.bits[v as usize * wpr..(v as usize + 1) * wpr];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros();
                w &= w - 1;
                Some((wi * 64) as Vertex + bit)
            })
        })
    }

    /// Edges in [`EdgeLabel`] order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        (0..self.n as Vertex).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| EdgeLabel { u, v })
        })
    }

    /// The complement: same vertices, `{u, v}` adjacent iff not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("n already validated");
        for a in 0..self.n {
            for c in a + 1..self.n {
                if !self.matrix.get(a, c) {
                    b.insert(a, c);
                }
            }
        }
        b.build()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s as Vertex);
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Connectivity is reported as metadata only; nothing here requires it.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field(
                "edges",
                &self.edges().map(|e| e.endpoints()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Labeled equality under the identity labeling.
pub fn graphs_equal(g: &Graph, h: &Graph) -> bool {
    g == h
}

/// Incremental construction of a [`Graph`].
pub struct GraphBuilder {
    n: usize,
    m: usize,
    matrix: BitMatrix,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Self {
            n,
            m: 0,
            matrix: BitMatrix::new(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<&mut Self, GraphError> {
        for x in [a, b] {
            if x as usize >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.insert(a as usize, b as usize);
        Ok(self)
    }

    /// Unchecked insert for callers that already hold valid, distinct labels.
    #[inline]
    pub(crate) fn insert(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        if self.matrix.set_pair(a, b) {
            self.m += 1;
        }
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            m: self.m,
            matrix: self.matrix,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn cycle_from_edge_list() {
        let g = c4();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert_eq!(g.degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_edges(0, []).unwrap_err(), GraphError::Empty);
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            GraphError::OutOfRange { vertex: 3, n: 3 }
        );
    }

    #[test]
    fn edges_are_canonical_and_sorted() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (1, 0)]).unwrap();
        let e: Vec<_> = g.edges().map(|e| e.endpoints()).collect();
        assert_eq!(e, vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(EdgeLabel::new(2, 1), EdgeLabel::new(1, 2));
        assert!(EdgeLabel::new(4, 4).is_none());
    }

    #[test]
    fn neighbors_cross_word_boundary() {
        let g = Graph::from_edges(130, [(0, 63), (0, 64), (0, 129)]).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![63, 64, 129]);
        assert_eq!(g.degree(0), 3);
        assert!(g.has_edge(129, 0));
    }

    #[test]
    fn complement_of_k4_is_edgeless() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = k4.complement();
        assert_eq!((c.n(), c.m()), (4, 0));
    }

    #[test]
    fn complement_of_c5_is_two_regular() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = c5.complement();
        assert_eq!(c.m(), 5);
        assert_eq!(c.degrees(), vec![2; 5]);
        assert!(c.is_connected());
    }

    #[test]
    fn labeled_equality() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(graphs_equal(&c4(), &c4()));
        assert!(!graphs_equal(&c4(), &p4));
        assert!(graphs_equal(&p4, &p4.complement().complement()));
    }

    #[test]
    fn disconnected_is_accepted() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 3);
        assert!(!g.is_connected());
    }
}
