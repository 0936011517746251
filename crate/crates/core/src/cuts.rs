//! Independent cuts and forest cuts.
//!
//! A cut is a vertex set `S` with `G - S` disconnected. The finders search
//! candidate sets by increasing size, lexicographically within a size, and
//! extend only sets that are still independent (resp. still induce a forest),
//! since every superset of a failing set fails too.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{count_components, is_split};
use crate::graph::{low_mask, Graph, GraphError, VertexSet};
use crate::neighborhood::{mask_is_forest, mask_is_independent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    Independent,
    Forest,
}

impl fmt::Display for CutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutKind::Independent => "independent",
            CutKind::Forest => "forest",
        })
    }
}

impl std::str::FromStr for CutKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "independent" => Ok(CutKind::Independent),
            "forest" => Ok(CutKind::Forest),
            other => Err(format!("unknown cut kind {other:?} (expected independent|forest)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("a separator must leave at least one vertex")]
    WholeVertexSet,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A cut together with what was verified about it when it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub kind: CutKind,
    pub cut: VertexSet,
    pub component_count_after_removal: usize,
}

impl CutCertificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        if g.check_set(&self.cut).is_err() {
            return false;
        }
        let shape_ok = match self.kind {
            CutKind::Independent => mask_is_independent(g, self.cut.bits()),
            CutKind::Forest => mask_is_forest(g, self.cut.bits()),
        };
        let rest = low_mask(g.n()) & !self.cut.bits();
        let count = count_components(g.rows(), rest);
        shape_ok
            && rest.count_ones() >= 2
            && count >= 2
            && count == self.component_count_after_removal
    }
}

/// `G - S` has at least two components. `S = V` is rejected.
pub fn is_separator(g: &Graph, s: &VertexSet) -> Result<bool, CutError> {
    g.check_set(s)?;
    let rest = low_mask(g.n()) & !s.bits();
    if rest == 0 {
        return Err(CutError::WholeVertexSet);
    }
    Ok(is_split(g.rows(), rest))
}

fn certificate(g: &Graph, kind: CutKind, mask: u64) -> CutCertificate {
    let rest = low_mask(g.n()) & !mask;
    CutCertificate {
        kind,
        cut: VertexSet::from_bits_unchecked(g.n(), mask),
        component_count_after_removal: count_components(g.rows(), rest),
    }
}

fn find_cut(g: &Graph, kind: CutKind) -> Option<CutCertificate> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let full = low_mask(n);
    let admissible = |mask: u64| match kind {
        CutKind::Independent => mask_is_independent(g, mask),
        CutKind::Forest => mask_is_forest(g, mask),
    };

    // Level k holds every admissible k-set in lexicographic order; extending
    // each by a larger vertex keeps that order for level k + 1.
    let mut level: Vec<u64> = vec![0];
    for _size in 0..=n - 2 {
        if let Some(&s) = level.iter().find(|&&s| is_split(g.rows(), full & !s)) {
            return Some(certificate(g, kind, s));
        }
        let mut next = Vec::new();
        for &s in &level {
            let start = if s == 0 { 0 } else { 64 - s.leading_zeros() as usize };
            for v in start..n {
                let t = s | 1 << v;
                if admissible(t) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    None
}

/// Smallest (then lexicographically first) independent cut, if any.
/// Disconnected graphs yield the empty cut.
pub fn find_independent_cut(g: &Graph) -> Option<CutCertificate> {
    find_cut(g, CutKind::Independent)
}

/// Smallest (then lexicographically first) forest cut, if any.
pub fn find_forest_cut(g: &Graph) -> Option<CutCertificate> {
    find_cut(g, CutKind::Forest)
}

pub fn find_cut_of_kind(g: &Graph, kind: CutKind) -> Option<CutCertificate> {
    find_cut(g, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{book_graph, complete_graph, cycle_graph};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn separator_examples() {
        let c4 = cycle_graph(4).unwrap();
        assert!(is_separator(&c4, &set(4, &[0, 2])).unwrap());
        let k4 = complete_graph(4);
        for s in crate::connectivity::k_subsets(4, 2).chain(crate::connectivity::k_subsets(4, 1)) {
            assert!(!is_separator(&k4, &VertexSet::from_bits(4, s).unwrap()).unwrap());
        }
        let book = book_graph(3).unwrap();
        assert!(is_separator(&book, &set(5, &[0, 1])).unwrap());
        assert_eq!(is_separator(&c4, &c4.vertices()), Err(CutError::WholeVertexSet));
    }

    #[test]
    fn independent_cut_examples() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_independent_cut(&path).unwrap().cut.to_vec(), vec![1]);
        for k in 2..=6 {
            assert!(find_independent_cut(&book_graph(k).unwrap()).is_none(), "book {k}");
        }
        let c4 = cycle_graph(4).unwrap();
        let cert = find_independent_cut(&c4).unwrap();
        assert_eq!(cert.cut.to_vec(), vec![0, 2]);
        assert_eq!(cert.component_count_after_removal, 2);
        assert!(cert.verify(&c4));
    }

    #[test]
    fn forest_cut_examples() {
        assert!(find_forest_cut(&complete_graph(5)).is_none());
        let book = book_graph(2).unwrap();
        let cert = find_forest_cut(&book).unwrap();
        assert_eq!(cert.cut.to_vec(), vec![0, 1]);
        assert!(cert.verify(&book));
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(find_forest_cut(&c5).unwrap().cut.to_vec(), vec![0, 2]);
    }

    #[test]
    fn disconnected_input_gives_empty_cut() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let cert = find_independent_cut(&g).unwrap();
        assert!(cert.cut.is_empty());
        assert!(cert.verify(&g));
        assert!(find_independent_cut(&Graph::empty(1)).is_none());
    }

    #[test]
    fn tampered_certificates_fail() {
        let c4 = cycle_graph(4).unwrap();
        let mut cert = find_independent_cut(&c4).unwrap();
        cert.cut = set(4, &[0, 1]);
        assert!(!cert.verify(&c4));
        let mut cert = find_independent_cut(&c4).unwrap();
        cert.component_count_after_removal = 3;
        assert!(!cert.verify(&c4));
    }
}
