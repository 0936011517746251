//! Graph families: books, prisms, complete graphs, cycles, the octahedron,
//! the Petersen graph, and K4-substitution of cubic graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::connectivity::is_k_connected;
use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("book graph needs at least one page, got {0}")]
    PageCount(usize),
    #[error("cycle length must be at least 3, got {0}")]
    CycleLength(usize),
    #[error("base graph is not 3-regular: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_size(n: usize) -> Result<(), ConstructionError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooManyVertices(n).into())
    } else {
        Ok(())
    }
}

/// `K_n`. Panics if `n` exceeds [`MAX_VERTICES`].
pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph too large")
}

pub fn cycle_graph(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::CycleLength(n));
    }
    check_size(n)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// `k` triangles sharing the spine edge `0-1`; pages are `2..k+2`.
pub fn book_graph(k: usize) -> Result<Graph, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::PageCount(k));
    }
    let n = k + 2;
    check_size(n)?;
    let pages = (2..n).flat_map(|p| [(0, p), (1, p)]);
    Ok(Graph::from_edges(n, std::iter::once((0, 1)).chain(pages))?)
}

/// `C_t x K2`: outer cycle `0..t`, inner cycle `t..2t`, rungs `i - (i + t)`.
pub fn prism(t: usize) -> Result<Graph, ConstructionError> {
    if t < 3 {
        return Err(ConstructionError::CycleLength(t));
    }
    check_size(2 * t)?;
    let edges = (0..t).flat_map(|i| {
        let j = (i + 1) % t;
        [(i, j), (t + i, t + j), (i, t + i)]
    });
    Ok(Graph::from_edges(2 * t, edges)?)
}

/// `K_{2,2,2}`; the non-edges are `0-1`, `2-3`, `4-5`.
pub fn octahedron() -> Graph {
    let edges = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).filter(|&(u, v)| u / 2 != v / 2);
    Graph::from_edges(6, edges).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i + 5)`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)]);
    Graph::from_edges(10, edges).unwrap()
}

/// Records how a K4-substituted graph was assembled from its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionMap {
    /// Base vertex owning each vertex of the substituted graph.
    pub copy_of: Vec<usize>,
    /// For each base edge `(a, b)` with `a < b`, in base edge order, the
    /// substituted-graph edge `(port in copy a, port in copy b)` carrying it.
    pub port_of: Vec<((usize, usize), (usize, usize))>,
    /// Whether the base graph was 3-connected. The construction runs either
    /// way; the result is 3-connected only when this holds.
    pub base_three_connected: bool,
}

impl SubstitutionMap {
    /// Vertex of copy `base` at local position `local` (0..4).
    pub fn vertex(base: usize, local: usize) -> usize {
        4 * base + local
    }

    /// The vertex of copy `base` that carries no base edge.
    pub fn internal_vertex(base: usize) -> usize {
        4 * base + 3
    }
}

/// Replaces every vertex of a cubic graph by a copy of `K4`.
///
/// Copy `v` occupies vertices `4v..4v+4`. The base edges at `v`, ordered by
/// the index of the other endpoint, attach to local vertices 0, 1, 2; local
/// vertex 3 carries no base edge.
pub fn k4_substitution(base: &Graph) -> Result<(Graph, SubstitutionMap), ConstructionError> {
    if let Some(v) = (0..base.n()).find(|&v| base.degree(v) != 3) {
        return Err(ConstructionError::NotCubic { vertex: v, degree: base.degree(v) });
    }
    let n = 4 * base.n();
    check_size(n)?;

    let port = |v: usize, w: usize| -> usize {
        // Rank of w among the neighbors of v.
        let below = base.row(v) & ((1u64 << w) - 1);
        SubstitutionMap::vertex(v, below.count_ones() as usize)
    };

    let mut edges = Vec::with_capacity(6 * base.n() + base.m());
    for v in 0..base.n() {
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((SubstitutionMap::vertex(v, a), SubstitutionMap::vertex(v, b)));
            }
        }
    }
    let mut port_of = Vec::with_capacity(base.m());
    for (a, b) in base.edges() {
        let e = (port(a, b), port(b, a));
        edges.push(e);
        port_of.push(((a, b), e));
    }
    let g = Graph::from_edges(n, edges)?;
    let map = SubstitutionMap {
        copy_of: (0..n).map(|x| x / 4).collect(),
        port_of,
        base_three_connected: is_k_connected(base, 3),
    };
    Ok((g, map))
}

/// Named fixture graphs, written `complete:5`, `cycle:6`, `book:3`,
/// `prism:4`, `octahedron`, `petersen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    Book(usize),
    Prism(usize),
    Octahedron,
    Petersen,
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match *self {
            NamedGraph::Complete(n) => {
                check_size(n)?;
                Ok(complete_graph(n))
            }
            NamedGraph::Cycle(n) => cycle_graph(n),
            NamedGraph::Book(k) => book_graph(k),
            NamedGraph::Prism(t) => prism(t),
            NamedGraph::Octahedron => Ok(octahedron()),
            NamedGraph::Petersen => Ok(petersen()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Book(k) => write!(f, "book:{k}"),
            NamedGraph::Prism(t) => write!(f, "prism:{t}"),
            NamedGraph::Octahedron => f.write_str("octahedron"),
            NamedGraph::Petersen => f.write_str("petersen"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, ConstructionError> {
        let unknown = || ConstructionError::UnknownName(s.to_string());
        let (name, param) = match s.split_once(':') {
            Some((name, p)) => (name, Some(p.parse::<usize>().map_err(|_| unknown())?)),
            None => (s, None),
        };
        match (name, param) {
            ("complete", Some(n)) => Ok(NamedGraph::Complete(n)),
            ("cycle", Some(n)) => Ok(NamedGraph::Cycle(n)),
            ("book", Some(k)) => Ok(NamedGraph::Book(k)),
            ("prism", Some(t)) => Ok(NamedGraph::Prism(t)),
            ("octahedron", None) => Ok(NamedGraph::Octahedron),
            ("petersen", None) => Ok(NamedGraph::Petersen),
            _ => Err(unknown()),
        }
    }
}

/// Builds a graph from its name; see [`NamedGraph`] for the syntax.
pub fn named_graph(name: &str) -> Result<Graph, ConstructionError> {
    name.parse::<NamedGraph>()?.build()
}
