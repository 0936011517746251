//! Connected components and exact vertex connectivity.
//!
//! Connectivity is decided by brute force over candidate separators in
//! increasing size. For the graph sizes this crate targets that is both fast
//! and easy to audit.

use crate::graph::{low_mask, Bits, Graph};

/// Component id per vertex, numbered in order of each component's smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ComponentLabeling {
    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.labels[u] == self.labels[v]
    }
}

/// Vertices of `mask` reachable from `start` without leaving `mask`.
#[inline]
pub(crate) fn reach(rows: &[u64], mask: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        next &= mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Number of components of the subgraph induced by `mask`.
#[inline]
pub(crate) fn count_components(rows: &[u64], mut mask: u64) -> usize {
    let mut count = 0;
    while mask != 0 {
        let comp = reach(rows, mask, mask.trailing_zeros() as usize);
        mask &= !comp;
        count += 1;
    }
    count
}

/// True when the subgraph induced by `mask` has at least two components.
#[inline]
pub(crate) fn is_split(rows: &[u64], mask: u64) -> bool {
    mask != 0 && reach(rows, mask, mask.trailing_zeros() as usize) != mask
}

/// All `k`-subsets of the low `n` bits, in increasing numeric order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { None } else { Some(1u64 << n) };
    let first = if k > n { None } else { Some(low_mask(k)) };
    std::iter::successors(first, move |&s| {
        if s == 0 {
            return None;
        }
        // Gosper's hack.
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 {
            return None;
        }
        let next = (((r ^ s) >> 2) / c) | r;
        match limit {
            Some(l) if next >= l => None,
            _ => Some(next),
        }
    })
}

pub fn components(g: &Graph) -> ComponentLabeling {
    let rows = g.rows();
    let mut labels = vec![usize::MAX; g.n()];
    let mut rest = low_mask(g.n());
    let mut count = 0;
    while rest != 0 {
        let comp = reach(rows, rest, rest.trailing_zeros() as usize);
        for v in Bits(comp) {
            labels[v] = count;
        }
        rest &= !comp;
        count += 1;
    }
    ComponentLabeling { labels, count }
}

pub fn is_connected(g: &Graph) -> bool {
    !is_split(g.rows(), low_mask(g.n()))
}

/// Whether some `size`-subset of the vertices separates `g`.
fn has_separator_of_size(g: &Graph, size: usize) -> bool {
    let full = low_mask(g.n());
    k_subsets(g.n(), size).any(|s| is_split(g.rows(), full & !s))
}

/// Lexicographically first (by mask order) separator of the given size.
pub fn find_separator_of_size(g: &Graph, size: usize) -> Option<u64> {
    let full = low_mask(g.n());
    k_subsets(g.n(), size).find(|&s| is_split(g.rows(), full & !s))
}

/// Vertex connectivity. Complete graphs get `n - 1`; disconnected graphs
/// (and the empty graph) get 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    // Non-complete: a minimum-degree vertex has a non-neighbor, so its
    // neighborhood is a separator and connectivity is at most the min degree.
    let delta = g.min_degree().unwrap_or(0);
    (0..delta).find(|&k| has_separator_of_size(g, k)).unwrap_or(delta)
}

/// `n > k` and no separator with fewer than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if k == 0 || g.is_complete() {
        return true;
    }
    if g.min_degree().unwrap_or(0) < k {
        return false;
    }
    (0..k).all(|s| !has_separator_of_size(g, s))
}
