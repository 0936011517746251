//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency rows are stored as `u64` bitmasks, so a graph holds at most
//! [`MAX_VERTICES`] vertices. Every query used by the search code (edge test,
//! neighborhood, degree) is a single word operation.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex set refers to a graph on {set_n} vertices, not {graph_n}")]
    HostMismatch { set_n: usize, graph_n: usize },
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A subset of the vertices of a graph on `host_n` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    host_n: usize,
}

impl VertexSet {
    pub fn empty(host_n: usize) -> Self {
        assert!(host_n <= MAX_VERTICES);
        VertexSet { bits: 0, host_n }
    }

    pub fn full(host_n: usize) -> Self {
        assert!(host_n <= MAX_VERTICES);
        VertexSet { bits: low_mask(host_n), host_n }
    }

    pub fn from_vertices<I>(host_n: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        if host_n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(host_n));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v >= host_n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: host_n });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { bits, host_n })
    }

    /// Wraps a raw mask. Bits at or above `host_n` are an error.
    pub fn from_bits(host_n: usize, bits: u64) -> Result<Self, GraphError> {
        if host_n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(host_n));
        }
        let stray = bits & !low_mask(host_n);
        if stray != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: stray.trailing_zeros() as usize,
                n: host_n,
            });
        }
        Ok(VertexSet { bits, host_n })
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(host_n: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !low_mask(host_n), 0);
        VertexSet { bits, host_n }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn host_n(&self) -> usize {
        self.host_n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.host_n && self.bits >> v & 1 == 1
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet { bits: !self.bits & low_mask(self.host_n), host_n: self.host_n }
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits | other.bits, host_n: self.host_n }
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits & other.bits, host_n: self.host_n }
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits & !other.bits, host_n: self.host_n }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges.
    /// Repeated pairs (in either orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph::from_rows(rows))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "{n} vertices exceeds {MAX_VERTICES}");
        Graph { n, m: 0, rows: vec![0; n] }
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        debug_assert!(rows.len() <= MAX_VERTICES);
        debug_assert!(rows.iter().enumerate().all(|(v, r)| r >> v & 1 == 0));
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(u, r)| Bits(*r).all(|v| v < rows.len() && rows[v] >> u & 1 == 1)));
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n: rows.len(), m, rows }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Adjacency row of `v` as a bitmask. Panics if `v >= n`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Minimum degree, or `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).min()
    }

    pub fn is_complete(&self) -> bool {
        2 * self.m == self.n * self.n.saturating_sub(1)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`: the open neighborhood of `v`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(self.n, self.rows[v]))
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &r)| Bits(r & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in the mask.
    #[inline]
    pub fn edges_within(&self, mask: u64) -> usize {
        Bits(mask).map(|v| (self.rows[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    /// The subgraph induced by `s`, relabeled by ascending vertex order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        Ok(self.induced_by_mask(s.bits()))
    }

    /// `G - S`, i.e. the subgraph induced by the complement of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        Ok(self.induced_by_mask(!s.bits() & low_mask(self.n)))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let kept: Vec<usize> = Bits(mask).collect();
        let rows = kept
            .iter()
            .map(|&u| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.rows[u] >> v & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Applies `perm` as a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(rows)
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let rows = self.rows.iter().enumerate().map(|(v, r)| !r & full & !(1 << v)).collect();
        Graph::from_rows(rows)
    }

    /// Returns this graph with one extra edge. Panics on a loop or bad vertex.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n && v < self.n);
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Graph::from_rows(rows)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.host_n() == self.n {
            Ok(())
        } else {
            Err(GraphError::HostMismatch { set_n: s.host_n(), graph_n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
