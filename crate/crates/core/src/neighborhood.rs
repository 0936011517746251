//! Neighborhood cycles, the degree-3 / degree-at-least-4 split, and the set
//! predicates used by the cut finders.

use crate::connectivity::count_components;
use crate::graph::{Bits, Graph, GraphError, VertexSet};

/// Vertices of degree exactly 3 and of degree at least 4.
///
/// The two classes cover the vertex set only when the minimum degree is at
/// least 3; otherwise `valid` is false and low-degree vertices are in neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    pub v3: VertexSet,
    pub v_ge4: VertexSet,
    pub min_degree: Option<usize>,
    pub valid: bool,
}

/// Acyclicity of the subgraph induced by `mask`: a forest has exactly
/// `|S| - c` edges, where `c` is its number of components.
#[inline]
pub(crate) fn mask_is_forest(g: &Graph, mask: u64) -> bool {
    let edges = g.edges_within(mask);
    let verts = mask.count_ones() as usize;
    // A graph with at least |S| edges always contains a cycle.
    if edges >= verts {
        return verts == 0 && edges == 0;
    }
    edges + count_components(g.rows(), mask) == verts
}

#[inline]
pub(crate) fn mask_is_independent(g: &Graph, mask: u64) -> bool {
    Bits(mask).all(|v| g.row(v) & mask == 0)
}

pub fn neighborhood_has_cycle(g: &Graph, v: usize) -> Result<bool, GraphError> {
    g.check_vertex(v)?;
    Ok(!mask_is_forest(g, g.row(v)))
}

/// Every vertex neighborhood induces a subgraph containing a cycle.
/// Vacuously true for the graph on zero vertices.
pub fn all_neighborhoods_cyclic(g: &Graph) -> bool {
    (0..g.n()).all(|v| !mask_is_forest(g, g.row(v)))
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let mut v3 = 0u64;
    let mut v_ge4 = 0u64;
    for v in 0..g.n() {
        match g.degree(v) {
            3 => v3 |= 1 << v,
            d if d >= 4 => v_ge4 |= 1 << v,
            _ => {}
        }
    }
    let min_degree = g.min_degree();
    DegreePartition {
        v3: VertexSet::from_bits_unchecked(g.n(), v3),
        v_ge4: VertexSet::from_bits_unchecked(g.n(), v_ge4),
        min_degree,
        valid: min_degree.is_none_or(|d| d >= 3),
    }
}

pub fn is_independent_set(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(s)?;
    Ok(mask_is_independent(g, s.bits()))
}

pub fn induces_forest(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(s)?;
    Ok(mask_is_forest(g, s.bits()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{book_graph, complete_graph, cycle_graph, k4_substitution, octahedron, prism};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn neighborhood_cycles() {
        let k4 = complete_graph(4);
        assert!((0..4).all(|v| neighborhood_has_cycle(&k4, v).unwrap()));
        let p3 = prism(3).unwrap();
        assert!((0..6).all(|v| !neighborhood_has_cycle(&p3, v).unwrap()));
        let sub = k4_substitution(&p3).unwrap().0;
        assert!((0..sub.n()).all(|v| neighborhood_has_cycle(&sub, v).unwrap()));
        assert!(neighborhood_has_cycle(&k4, 4).is_err());
    }

    #[test]
    fn all_cyclic_examples() {
        assert!(all_neighborhoods_cyclic(&octahedron()));
        assert!(!all_neighborhoods_cyclic(&cycle_graph(6).unwrap()));
        assert!(!all_neighborhoods_cyclic(&book_graph(3).unwrap()));
        assert!(all_neighborhoods_cyclic(&Graph::empty(0)));
    }

    #[test]
    fn partition_examples() {
        let p = degree_partition(&complete_graph(4));
        assert!(p.valid);
        assert_eq!((p.v3.len(), p.v_ge4.len()), (4, 0));

        let p = degree_partition(&k4_substitution(&complete_graph(4)).unwrap().0);
        assert!(p.valid);
        assert_eq!((p.v3.len(), p.v_ge4.len()), (4, 12));

        let p = degree_partition(&cycle_graph(5).unwrap());
        assert!(!p.valid);
        assert_eq!(p.min_degree, Some(2));
        assert_eq!(p.v3.len() + p.v_ge4.len(), 0);
    }

    #[test]
    fn set_predicates() {
        let c4 = cycle_graph(4).unwrap();
        assert!(is_independent_set(&c4, &VertexSet::empty(4)).unwrap());
        assert!(is_independent_set(&c4, &set(4, &[0, 2])).unwrap());
        let book = book_graph(2).unwrap();
        let spine = set(4, &[0, 1]);
        assert!(!is_independent_set(&book, &spine).unwrap());
        assert!(induces_forest(&book, &spine).unwrap());
        assert!(!induces_forest(&book, &set(4, &[0, 1, 2])).unwrap());
        assert!(induces_forest(&c4, &set(4, &[0, 2])).unwrap());
        assert!(!induces_forest(&c4, &c4.vertices()).unwrap());
        assert!(is_independent_set(&c4, &VertexSet::empty(5)).is_err());
    }
}
